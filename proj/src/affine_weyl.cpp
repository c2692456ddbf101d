#include "qschur/affine_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
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

int ceil_div(int a, int b) { return -floor_div(-a, b); }

} // namespace

AffinePermutation::AffinePermutation(std::vector<int> window) : window_(std::move(window)) {
  const int d = rank();
  if (d == 0) throw std::invalid_argument("AffinePermutation: empty window");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int x : window_) {
    auto r = static_cast<std::size_t>(floor_mod(x - 1, d));
    if (seen[r]) throw std::invalid_argument("AffinePermutation: window entries not distinct mod D");
    seen[r] = true;
  }
}

AffinePermutation AffinePermutation::identity(int rank) {
  std::vector<int> w(static_cast<std::size_t>(rank));
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple(int rank, int i) {
  return identity(rank).times_simple(i);
}

AffinePermutation AffinePermutation::rotation(int rank, int k) {
  std::vector<int> w(static_cast<std::size_t>(rank));
  std::iota(w.begin(), w.end(), 1 + k);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::translation(const std::vector<int>& mu) {
  const int d = static_cast<int>(mu.size());
  std::vector<int> w(mu.size());
  for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = i + 1 + d * mu[static_cast<std::size_t>(i)];
  return AffinePermutation(std::move(w));
}

int AffinePermutation::operator()(int i) const {
  const int d = rank();
  const int q = floor_div(i - 1, d);
  const int r = i - 1 - q * d;
  return window_[static_cast<std::size_t>(r)] + q * d;
}

int AffinePermutation::rotation_class() const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += window_[static_cast<std::size_t>(i)] - (i + 1);
  return s / rank();
}

AffinePermutation AffinePermutation::inverse() const {
  const int d = rank();
  std::vector<int> inv(window_.size());
  for (int a = 1; a <= d; ++a) {
    const int b = window_[static_cast<std::size_t>(a - 1)];
    const int q = floor_div(b - 1, d);
    inv[static_cast<std::size_t>(b - 1 - q * d)] = a - q * d;
  }
  AffinePermutation r;
  r.window_ = std::move(inv);
  return r;
}

AffinePermutation AffinePermutation::times_simple(int i) const {
  const int d = rank();
  if (d < 2 || i < 0 || i >= d) throw std::invalid_argument("simple reflection index out of range");
  AffinePermutation r = *this;
  if (i > 0) {
    std::swap(r.window_[static_cast<std::size_t>(i - 1)], r.window_[static_cast<std::size_t>(i)]);
  } else {
    const int first = window_.front();
    const int last = window_.back();
    r.window_.front() = last - d;
    r.window_.back() = first + d;
  }
  return r;
}

AffinePermutation AffinePermutation::simple_times(int i) const {
  const int d = rank();
  if (d < 2 || i < 0 || i >= d) throw std::invalid_argument("simple reflection index out of range");
  AffinePermutation r = *this;
  for (int& x : r.window_) {
    const int res = floor_mod(x, d);
    if (res == i) {
      ++x;
    } else if (res == floor_mod(i + 1, d)) {
      --x;
    }
  }
  return r;
}

AffinePermutation operator*(const AffinePermutation& x, const AffinePermutation& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("AffinePermutation: rank mismatch");
  AffinePermutation r;
  r.window_.reserve(y.window_.size());
  for (int b : y.window_) r.window_.push_back(x(b));
  return r;
}

std::string AffinePermutation::to_text() const {
  std::ostringstream os;
  os << "D=" << rank() << ";[";
  for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
  os << "]";
  return os.str();
}

AffinePermutation AffinePermutation::parse(const std::string& text) {
  static const std::regex re(R"(\s*D\s*=\s*(\d+)\s*;\s*\[([-0-9,\s]*)\]\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw std::invalid_argument("cannot parse affine permutation '" + text + "' (expected D=<d>;[w1,...,wD])");
  const int d = std::stoi(m[1].str());
  std::vector<int> w;
  std::stringstream ss(m[2].str());
  std::string item;
  while (std::getline(ss, item, ','))
    if (item.find_first_not_of(" \t") != std::string::npos) w.push_back(std::stoi(item));
  if (static_cast<int>(w.size()) != d)
    throw std::invalid_argument("affine permutation '" + text + "': window length differs from D");
  return AffinePermutation(std::move(w));
}

int length(const AffinePermutation& w) {
  const int d = w.rank();
  int total = 0;
  for (int a = 1; a <= d; ++a) {
    for (int b = 1; b <= d; ++b) {
      // j = b + kD > a with w(j) = w(b) + kD < w(a).
      const int k_min = b > a ? 0 : 1;
      const int k_bound = ceil_div(w(a) - w(b), d); // k < k_bound
      total += std::max(0, k_bound - k_min);
    }
  }
  return total;
}

bool right_ascent(const AffinePermutation& w, int i) { return w(i) < w(i + 1); }

bool left_ascent(const AffinePermutation& w, int i) {
  const AffinePermutation inv = w.inverse();
  return inv(i) < inv(i + 1);
}

ReducedWord reduced_word(const AffinePermutation& w) {
  const int d = w.rank();
  AffinePermutation cur = w;
  std::vector<int> stripped;
  bool found = true;
  while (found) {
    found = false;
    for (int i = 0; i < d && d >= 2; ++i) {
      if (!right_ascent(cur, i)) {
        cur = cur.times_simple(i);
        stripped.push_back(i);
        found = true;
        break;
      }
    }
  }
  ReducedWord word;
  word.rotation = cur.window().front() - 1;
  word.letters.assign(stripped.rbegin(), stripped.rend());
  return word;
}

AffinePermutation from_word(int rank, const ReducedWord& word) {
  AffinePermutation w = AffinePermutation::rotation(rank, word.rotation);
  for (int i : word.letters) w = w.times_simple(i);
  return w;
}

namespace {

bool bruhat_rec(const AffinePermutation& x, const AffinePermutation& y, int ly) {
  if (ly == 0) return x == y;
  const int d = y.rank();
  for (int s = 0; s < d; ++s) {
    if (right_ascent(y, s)) continue;
    const AffinePermutation ys = y.times_simple(s);
    if (!right_ascent(x, s)) return bruhat_rec(x.times_simple(s), ys, ly - 1);
    return bruhat_rec(x, ys, ly - 1);
  }
  return x == y;
}

} // namespace

BruhatResult bruhat_leq(const AffinePermutation& x, const AffinePermutation& y) {
  if (x.rank() != y.rank() || x.rotation_class() != y.rotation_class())
    return BruhatResult::incomparable_classes;
  const int lx = length(x);
  const int ly = length(y);
  if (lx > ly) return BruhatResult::not_less_or_equal;
  return bruhat_rec(x, y, ly) ? BruhatResult::less_or_equal : BruhatResult::not_less_or_equal;
}

std::vector<int> YoungSubgroup::generators() const {
  std::vector<int> g;
  for (auto [a, b] : blocks)
    for (int i = a; i < b; ++i) g.push_back(i);
  return g;
}

std::size_t YoungSubgroup::order() const {
  std::size_t o = 1;
  for (auto [a, b] : blocks)
    for (int k = 2; k <= b - a + 1; ++k) o *= static_cast<std::size_t>(k);
  return o;
}

YoungSubgroup young_subgroup(const std::vector<int>& dominant_values) {
  YoungSubgroup y;
  y.rank = static_cast<int>(dominant_values.size());
  int start = 1;
  for (int i = 1; i <= y.rank; ++i) {
    if (i == y.rank || dominant_values[static_cast<std::size_t>(i)] != dominant_values[static_cast<std::size_t>(i - 1)]) {
      y.blocks.emplace_back(start, i);
      start = i + 1;
    }
  }
  return y;
}

AffinePermutation min_double_coset_rep(const std::vector<int>& lambda, const AffinePermutation& w,
                                       const std::vector<int>& mu) {
  const auto left = young_subgroup(lambda).generators();
  const auto right = young_subgroup(mu).generators();
  AffinePermutation cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : left) {
      if (!left_ascent(cur, s)) {
        cur = cur.simple_times(s);
        changed = true;
      }
    }
    for (int s : right) {
      if (!right_ascent(cur, s)) {
        cur = cur.times_simple(s);
        changed = true;
      }
    }
  }
  return cur;
}

std::vector<AffinePermutation> enumerate_double_coset(const std::vector<int>& lambda,
                                                      const std::vector<int>& mu,
                                                      const AffinePermutation& rep) {
  const auto left = young_subgroup(lambda).generators();
  const auto right = young_subgroup(mu).generators();
  std::set<AffinePermutation> seen{rep};
  std::vector<AffinePermutation> frontier{rep};
  while (!frontier.empty()) {
    std::vector<AffinePermutation> next;
    for (const auto& w : frontier) {
      for (int s : left) {
        auto x = w.simple_times(s);
        if (seen.insert(x).second) next.push_back(x);
      }
      for (int s : right) {
        auto x = w.times_simple(s);
        if (seen.insert(x).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

} // namespace qschur
