#include "qschur/flag_comb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

// Distinct permutations of a multiset, in lexicographic order.
std::vector<std::vector<int>> multiset_permutations(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(items);
  } while (std::next_permutation(items.begin(), items.end()));
  return out;
}

std::size_t factorial(int k) {
  std::size_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

} // namespace

int residue_index(int i, int n) { return floor_mod(i - 1, n) + 1; }

// ---------------------------------------------------------------- FlagSymbol

FlagSymbol::FlagSymbol(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (n_ < 1) throw std::invalid_argument("FlagSymbol: n must be positive");
  if (values_.empty()) throw std::invalid_argument("FlagSymbol: empty window");
}

int FlagSymbol::operator()(int k) const {
  const int d = rank();
  const int q = floor_div(k - 1, d);
  return values_[static_cast<std::size_t>(k - 1 - q * d)] + q * n_;
}

FlagSymbol FlagSymbol::with_value(int k, int value) const {
  const int d = rank();
  const int q = floor_div(k - 1, d);
  FlagSymbol r = *this;
  r.values_[static_cast<std::size_t>(k - 1 - q * d)] = value - q * n_;
  return r;
}

std::vector<int> FlagSymbol::weight() const {
  std::vector<int> w(static_cast<std::size_t>(n_), 0);
  for (int x : values_) ++w[static_cast<std::size_t>(residue_index(x, n_) - 1)];
  return w;
}

bool FlagSymbol::is_dominant() const {
  if (values_.front() < 1 || values_.back() > n_) return false;
  return std::is_sorted(values_.begin(), values_.end());
}

FlagSymbol FlagSymbol::dominant() const { return dominant_from_weight(weight()); }

std::vector<int> FlagSymbol::preimage(int value) const {
  std::vector<int> out;
  const int d = rank();
  for (int r = 1; r <= d; ++r) {
    const int diff = value - values_[static_cast<std::size_t>(r - 1)];
    if (floor_mod(diff, n_) == 0) out.push_back(r + (diff / n_) * d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FlagSymbol::to_text() const {
  std::ostringstream os;
  os << "n=" << n_ << ";D=" << rank() << ";[";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << "]";
  return os.str();
}

FlagSymbol FlagSymbol::parse(const std::string& text) {
  static const std::regex re(R"(\s*n\s*=\s*(\d+)\s*;\s*D\s*=\s*(\d+)\s*;\s*\[([-0-9,\s]*)\]\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw std::invalid_argument("cannot parse flag symbol '" + text + "' (expected n=<n>;D=<d>;[p1,...,pD])");
  const int n = std::stoi(m[1].str());
  const int d = std::stoi(m[2].str());
  std::vector<int> vals;
  std::stringstream ss(m[3].str());
  std::string item;
  while (std::getline(ss, item, ','))
    if (item.find_first_not_of(" \t") != std::string::npos) vals.push_back(std::stoi(item));
  if (static_cast<int>(vals.size()) != d)
    throw std::invalid_argument("flag symbol '" + text + "': window length differs from D");
  return FlagSymbol(n, std::move(vals));
}

FlagSymbol dominant_from_weight(const std::vector<int>& weight) {
  std::vector<int> vals;
  for (std::size_t i = 0; i < weight.size(); ++i) {
    if (weight[i] < 0) throw std::invalid_argument("dominant_from_weight: negative weight");
    vals.insert(vals.end(), static_cast<std::size_t>(weight[i]), static_cast<int>(i) + 1);
  }
  return FlagSymbol(static_cast<int>(weight.size()), std::move(vals));
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      cur[static_cast<std::size_t>(idx)] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[static_cast<std::size_t>(idx)] = k;
      rec(idx + 1, left - k);
    }
  };
  if (parts > 0) rec(0, total);
  return out;
}

std::vector<FlagSymbol> dominant_symbols(int n, int rank) {
  std::vector<FlagSymbol> out;
  for (const auto& w : compositions(rank, n)) out.push_back(dominant_from_weight(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FlagSymbol> flag_symbols_in_window(int n, int rank, int lo, int hi) {
  std::vector<FlagSymbol> out;
  std::vector<int> cur(static_cast<std::size_t>(rank), lo);
  while (true) {
    out.emplace_back(n, cur);
    int i = rank - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi) {
      cur[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

FlagSymbol act_on_flag_symbol(const FlagSymbol& p, const AffinePermutation& w) {
  if (p.rank() != w.rank()) throw std::invalid_argument("act_on_flag_symbol: rank mismatch");
  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(p.rank()));
  for (int k = 1; k <= p.rank(); ++k) vals.push_back(p(w(k)));
  return FlagSymbol(p.n(), std::move(vals));
}

namespace {

// For each residue c in [1, n]: the window positions k with p(k) = c mod n,
// together with their period offsets m_k (p(k) = c + m_k n).
struct ResidueClasses {
  std::vector<std::vector<std::pair<int, int>>> members; // (k, m_k)
  std::vector<int> block_start;                          // first slot of lambda's block
};

ResidueClasses residue_classes(const FlagSymbol& p) {
  const int n = p.n();
  ResidueClasses rc;
  rc.members.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= p.rank(); ++k) {
    const int x = p.values()[static_cast<std::size_t>(k - 1)];
    const int c = residue_index(x, n);
    rc.members[static_cast<std::size_t>(c - 1)].emplace_back(k, (x - c) / n);
  }
  const auto w = p.weight();
  rc.block_start.resize(static_cast<std::size_t>(n));
  int start = 1;
  for (int c = 0; c < n; ++c) {
    rc.block_start[static_cast<std::size_t>(c)] = start;
    start += w[static_cast<std::size_t>(c)];
  }
  return rc;
}

} // namespace

AffinePermutation min_coset_rep(const FlagSymbol& p) {
  const int d = p.rank();
  auto rc = residue_classes(p);
  std::vector<int> window(static_cast<std::size_t>(d));
  for (std::size_t c = 0; c < rc.members.size(); ++c) {
    auto& mem = rc.members[c];
    // Order by the position translated to the base period of the value.
    std::sort(mem.begin(), mem.end(), [d](const auto& a, const auto& b) {
      return a.first - a.second * d < b.first - b.second * d;
    });
    int slot = rc.block_start[c];
    for (auto [k, m] : mem) window[static_cast<std::size_t>(k - 1)] = slot++ + m * d;
  }
  return AffinePermutation(std::move(window));
}

std::vector<AffinePermutation> coset_elements(const FlagSymbol& p) {
  const int d = p.rank();
  auto rc = residue_classes(p);
  std::vector<std::vector<int>> base(static_cast<std::size_t>(d));
  std::vector<AffinePermutation> out;
  std::vector<int> window(static_cast<std::size_t>(d));
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == rc.members.size()) {
      out.emplace_back(window);
      return;
    }
    const auto& mem = rc.members[c];
    std::vector<int> slots(mem.size());
    std::iota(slots.begin(), slots.end(), rc.block_start[c]);
    do {
      for (std::size_t t = 0; t < mem.size(); ++t)
        window[static_cast<std::size_t>(mem[t].first - 1)] = slots[t] + mem[t].second * d;
      rec(c + 1);
    } while (std::next_permutation(slots.begin(), slots.end()));
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

int x_stat(const FlagSymbol& p) {
  const int n = p.n();
  const int d = p.rank();
  int total = 0;
  for (int r = 1; r <= d; ++r) {
    const int pr = p.values()[static_cast<std::size_t>(r - 1)];
    const int c = residue_index(pr, n);
    const int k = r + ((c - pr) / n) * d; // p(k) = c in [1, n]
    for (int b = 1; b <= d; ++b) {
      // l = b + sD > k with p(l) = p(b) + s n <= c.
      const int pb = p.values()[static_cast<std::size_t>(b - 1)];
      const int s_max = floor_div(c - pb, n);
      const int s_min = floor_div(k - b, d) + 1;
      total += std::max(0, s_max - s_min + 1);
    }
  }
  return total;
}

// ----------------------------------------------------------- PeriodicMatrix

PeriodicMatrix::PeriodicMatrix(int n, const std::vector<std::tuple<int, int, int>>& entries) : n_(n) {
  if (n < 1) throw std::invalid_argument("PeriodicMatrix: n must be positive");
  for (auto [i, j, v] : entries) {
    if (v < 0) throw std::invalid_argument("PeriodicMatrix: negative entry");
    if (v == 0) continue;
    const int ri = residue_index(i, n);
    entries_[{ri, j + (ri - i)}] += v;
    rank_ += v;
  }
}

int PeriodicMatrix::at(int i, int j) const {
  const int ri = residue_index(i, n_);
  auto it = entries_.find({ri, j + (ri - i)});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<int> PeriodicMatrix::row_weight() const {
  std::vector<int> w(static_cast<std::size_t>(n_), 0);
  for (const auto& [key, v] : entries_) w[static_cast<std::size_t>(key.first - 1)] += v;
  return w;
}

std::vector<int> PeriodicMatrix::col_weight() const {
  std::vector<int> w(static_cast<std::size_t>(n_), 0);
  for (const auto& [key, v] : entries_) w[static_cast<std::size_t>(residue_index(key.second, n_) - 1)] += v;
  return w;
}

int PeriodicMatrix::shift_degree() const {
  int s = 0;
  for (const auto& [key, v] : entries_) s += v * (key.first - key.second);
  return s;
}

PeriodicMatrix PeriodicMatrix::transpose() const {
  std::vector<std::tuple<int, int, int>> e;
  for (const auto& [key, v] : entries_) e.emplace_back(key.second, key.first, v);
  return PeriodicMatrix(n_, e);
}

PeriodicMatrix operator+(const PeriodicMatrix& a, const PeriodicMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("PeriodicMatrix: n mismatch");
  std::vector<std::tuple<int, int, int>> e;
  for (const auto& [key, v] : a.entries_) e.emplace_back(key.first, key.second, v);
  for (const auto& [key, v] : b.entries_) e.emplace_back(key.first, key.second, v);
  return PeriodicMatrix(a.n_, e);
}

std::optional<PeriodicMatrix> PeriodicMatrix::minus(const PeriodicMatrix& b) const {
  if (n_ != b.n_) throw std::invalid_argument("PeriodicMatrix: n mismatch");
  std::map<Key, int> m = entries_;
  for (const auto& [key, v] : b.entries_) {
    int& slot = m[key];
    slot -= v;
    if (slot < 0) return std::nullopt;
  }
  std::vector<std::tuple<int, int, int>> e;
  for (const auto& [key, v] : m) e.emplace_back(key.first, key.second, v);
  return PeriodicMatrix(n_, e);
}

std::string PeriodicMatrix::to_text() const {
  std::ostringstream os;
  os << "n=" << n_ << ";{";
  bool first = true;
  for (const auto& [key, v] : entries_) {
    os << (first ? "" : ",") << "(" << key.first << "," << key.second << "):" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

PeriodicMatrix diagonal_matrix(const FlagSymbol& lambda) {
  std::vector<std::tuple<int, int, int>> e;
  const auto w = lambda.weight();
  for (int i = 1; i <= lambda.n(); ++i) e.emplace_back(i, i, w[static_cast<std::size_t>(i - 1)]);
  return PeriodicMatrix(lambda.n(), e);
}

PeriodicMatrix identity_matrix(int n) {
  std::vector<std::tuple<int, int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, i, 1);
  return PeriodicMatrix(n, e);
}

int y_stat(const PeriodicMatrix& s) {
  const int n = s.n();
  long total = 0;
  for (const auto& [ij, sij] : s.entries()) {
    const auto [i, j] = ij;
    for (const auto& [kl, skl] : s.entries()) {
      const auto [k0, l0] = kl;
      // k = k0 + tn <= i and l = l0 + tn > j.
      const int t_max = floor_div(i - k0, n);
      const int t_min = floor_div(j - l0, n) + 1;
      if (t_max >= t_min) total += static_cast<long>(sij) * skl * (t_max - t_min + 1);
    }
  }
  return static_cast<int>(total);
}

PeriodicMatrix matrix_of_pair(const FlagSymbol& p, const FlagSymbol& q) {
  if (p.rank() != q.rank() || p.n() != q.n()) throw std::invalid_argument("matrix_of_pair: shape mismatch");
  std::vector<std::tuple<int, int, int>> e;
  for (int k = 1; k <= p.rank(); ++k) e.emplace_back(p(k), q(k), 1);
  return PeriodicMatrix(p.n(), e);
}

namespace {

// For each column residue j in [1, n]: the multiset of row indices i (in Z)
// with s(i, j) > 0, repeated s(i, j) times.
std::vector<std::vector<int>> column_multisets(const PeriodicMatrix& s) {
  const int n = s.n();
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(n));
  for (const auto& [key, v] : s.entries()) {
    const int j = residue_index(key.second, n);
    const int i = key.first + (j - key.second);
    cols[static_cast<std::size_t>(j - 1)].insert(cols[static_cast<std::size_t>(j - 1)].end(),
                                                 static_cast<std::size_t>(v), i);
  }
  return cols;
}

} // namespace

std::vector<FlagSymbol> flags_of_matrix(const PeriodicMatrix& s) {
  const int n = s.n();
  const int d = s.rank();
  const auto cols = column_multisets(s);
  std::vector<std::vector<std::vector<int>>> options;
  for (const auto& c : cols) options.push_back(multiset_permutations(c));
  std::vector<FlagSymbol> out;
  std::vector<int> vals;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == options.size()) {
      out.emplace_back(n, vals);
      return;
    }
    for (const auto& perm : options[j]) {
      const auto mark = vals.size();
      vals.insert(vals.end(), perm.begin(), perm.end());
      rec(j + 1);
      vals.resize(mark);
    }
  };
  vals.reserve(static_cast<std::size_t>(d));
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t flags_of_matrix_count(const PeriodicMatrix& s) {
  std::size_t count = 1;
  const int n = s.n();
  std::vector<int> colsum(static_cast<std::size_t>(n), 0);
  std::size_t denom = 1;
  for (const auto& [key, v] : s.entries()) {
    colsum[static_cast<std::size_t>(residue_index(key.second, n) - 1)] += v;
    denom *= factorial(v);
  }
  for (int c : colsum) count *= factorial(c);
  return count / denom;
}

std::optional<std::pair<PeriodicMatrix, PeriodicMatrix>> generator_matrices(const FlagSymbol& lambda, int residue) {
  const int n = lambda.n();
  if (residue < 0 || residue >= n) throw std::invalid_argument("generator_matrices: residue out of range");
  const int i = residue == 0 ? n : residue;
  const auto w = lambda.weight();
  if (w[static_cast<std::size_t>(i - 1)] < 1) return std::nullopt;
  std::vector<std::tuple<int, int, int>> e;
  for (int k = 1; k <= n; ++k) {
    const int v = w[static_cast<std::size_t>(k - 1)] - (k == i ? 1 : 0);
    e.emplace_back(k, k, v);
  }
  auto ee = e;
  ee.emplace_back(i, i + 1, 1);
  auto ff = e;
  ff.emplace_back(i + 1, i, 1);
  return std::make_pair(PeriodicMatrix(n, ee), PeriodicMatrix(n, ff));
}

bool is_aperiodic(const PeriodicMatrix& s) {
  const int n = s.n();
  std::map<int, bool> offsets;
  for (const auto& [key, v] : s.entries()) offsets[key.second - key.first] = true;
  for (const auto& [off, _] : offsets) {
    if (off == 0) continue;
    bool has_zero = false;
    for (int i = 1; i <= n && !has_zero; ++i) has_zero = s.at(i, i + off) == 0;
    if (!has_zero) return false;
  }
  return true;
}

OrderHint order_hint(const PeriodicMatrix& t, const PeriodicMatrix& s) {
  if (t.n() != s.n() || t.rank() != s.rank() || t.row_weight() != s.row_weight() ||
      t.col_weight() != s.col_weight())
    throw std::invalid_argument("order_hint: matrices have different shapes");
  if (t == s) return OrderHint::equal;
  for (int i = 1; i <= s.n(); ++i)
    if (t.at(i, i) < s.at(i, i)) return OrderHint::definitely_not_leq;
  return OrderHint::consistent;
}

namespace {

void enumerate_band(int n, const std::vector<int>& row_sums, int band,
                    const std::function<void(const PeriodicMatrix&)>& sink) {
  // Fill row i (in [1, n]) over columns i - band .. i + band.
  const int width = 2 * band + 1;
  std::vector<std::vector<std::vector<int>>> row_options;
  for (int i = 1; i <= n; ++i) row_options.push_back(compositions(row_sums[static_cast<std::size_t>(i - 1)], width));
  std::vector<std::tuple<int, int, int>> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      sink(PeriodicMatrix(n, cur));
      return;
    }
    for (const auto& row : row_options[static_cast<std::size_t>(i - 1)]) {
      const auto mark = cur.size();
      for (int t = 0; t < width; ++t)
        if (row[static_cast<std::size_t>(t)] > 0) cur.emplace_back(i, i - band + t, row[static_cast<std::size_t>(t)]);
      rec(i + 1);
      cur.resize(mark);
    }
  };
  rec(1);
}

} // namespace

std::vector<PeriodicMatrix> matrices_in_band(const FlagSymbol& lambda, const FlagSymbol& mu, int band) {
  std::vector<PeriodicMatrix> out;
  const auto target = mu.weight();
  enumerate_band(lambda.n(), lambda.weight(), band, [&](const PeriodicMatrix& m) {
    if (m.col_weight() == target) out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PeriodicMatrix> matrices_in_band(int n, int rank, int band) {
  std::vector<PeriodicMatrix> out;
  for (const auto& w : compositions(rank, n))
    enumerate_band(n, w, band, [&](const PeriodicMatrix& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace qschur
