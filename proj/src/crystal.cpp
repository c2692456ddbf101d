#include "qschur/crystal.hpp"

#include "qschur/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace qschur {

namespace {

void check_args(const FlagSymbol& p, int i) {
  if (p.n() < 2) throw std::invalid_argument("crystal operators need n >= 2");
  if (i < 0 || i >= p.n()) throw std::invalid_argument("residue out of range");
}

} // namespace

BracketingPartition bracket(const FlagSymbol& p, int i) {
  check_args(p, i);
  std::vector<int> pos = p.preimage(i);
  const auto hi = p.preimage(i + 1);
  pos.insert(pos.end(), hi.begin(), hi.end());
  std::sort(pos.begin(), pos.end());
  BracketingPartition b;
  b.residue = i;
  std::vector<int> open;
  std::vector<int> unmatched_close;
  for (int k : pos) {
    if (p(k) == i) {
      open.push_back(k);
    } else if (!open.empty()) {
      b.pairs.emplace_back(open.back(), k);
      open.pop_back();
    } else {
      unmatched_close.push_back(k);
    }
  }
  b.J = unmatched_close;
  b.J.insert(b.J.end(), open.begin(), open.end());
  std::sort(b.pairs.begin(), b.pairs.end());
  return b;
}

int crystal_epsilon(const FlagSymbol& p, int i) {
  const auto b = bracket(p, i);
  int c = 0;
  for (int k : b.J) c += p(k) == i + 1;
  return c;
}

int crystal_phi(const FlagSymbol& p, int i) {
  const auto b = bracket(p, i);
  int c = 0;
  for (int k : b.J) c += p(k) == i;
  return c;
}

std::optional<FlagSymbol> kashiwara_f(const FlagSymbol& p, int i) {
  const auto b = bracket(p, i);
  for (int k : b.J)
    if (p(k) == i) return p.with_value(k, i + 1);
  return std::nullopt;
}

std::optional<FlagSymbol> kashiwara_e(const FlagSymbol& p, int i) {
  const auto b = bracket(p, i);
  for (auto it = b.J.rbegin(); it != b.J.rend(); ++it)
    if (p(*it) == i + 1) return p.with_value(*it, i);
  return std::nullopt;
}

std::vector<FlagSymbol> crystal_chain(const FlagSymbol& p, int i) {
  const auto b = bracket(p, i);
  std::vector<FlagSymbol> chain;
  for (std::size_t l = 0; l <= b.J.size(); ++l) {
    FlagSymbol q = p;
    for (std::size_t t = 0; t < b.J.size(); ++t) q = q.with_value(b.J[t], t < l ? i + 1 : i);
    chain.push_back(q);
  }
  return chain;
}

ModuleVector angle_vector(const FlagSymbol& p, int i) {
  const auto b = bracket(p, i);
  const int jn = static_cast<int>(b.J.size());
  const int t = static_cast<int>(b.pairs.size());
  int a_size = 0;
  for (int k : b.J) a_size += p(k) == i + 1;
  ModuleVector out(p.n(), p.rank());
  for (unsigned amask = 0; amask < (1u << jn); ++amask) {
    if (__builtin_popcount(amask) != a_size) continue;
    FlagSymbol q = p;
    int n_a = 0;
    for (int x = 0; x < jn; ++x) {
      const bool in_a = (amask >> x) & 1u;
      q = q.with_value(b.J[static_cast<std::size_t>(x)], in_a ? i + 1 : i);
      // J is sorted, so pairs (k in A, l in J - A, k > l) are x > y.
      if (in_a)
        for (int y = 0; y < x; ++y) n_a += !((amask >> y) & 1u);
    }
    for (unsigned bmask = 0; bmask < (1u << t); ++bmask) {
      FlagSymbol r = q;
      for (int s = 0; s < t; ++s) {
        const auto [k, l] = b.pairs[static_cast<std::size_t>(s)];
        const bool flip = (bmask >> s) & 1u;
        r = r.with_value(k, flip ? i + 1 : i);
        r = r.with_value(l, flip ? i : i + 1);
      }
      const int nb = __builtin_popcount(bmask);
      const Laurent sign = nb % 2 ? Laurent(-1) : Laurent(1);
      out.add_term(r, sign.shifted(n_a + nb));
    }
  }
  return out;
}

namespace {

using RVec = std::map<FlagSymbol, Rational>;

RVec to_rvec(const ModuleVector& x) {
  RVec r;
  for (const auto& [p, c] : x.terms()) r.emplace(p, Rational(c));
  return r;
}

void add_into(RVec& acc, const FlagSymbol& p, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

RVec apply_r(int i, const RVec& x, Chevalley which) {
  RVec out;
  for (const auto& [p, c] : x) {
    const ModuleVector y = which == Chevalley::e ? apply_e(i, ModuleVector::basis(p)) : apply_f(i, ModuleVector::basis(p));
    for (const auto& [q, a] : y.terms()) add_into(out, q, c * Rational(a));
  }
  return out;
}

RVec divided_r(int i, int k, RVec x, Chevalley which) {
  for (int t = 0; t < k; ++t) x = apply_r(i, x, which);
  if (k >= 2) {
    const Rational fact(quantum_factorial(k));
    for (auto& [p, c] : x) c /= fact;
  }
  return x;
}

RVec scaled(const RVec& x, const Rational& c) {
  RVec out;
  for (const auto& [p, a] : x) add_into(out, p, a * c);
  return out;
}

// Value at v = 0 of a rational function regular there.
BigRational value_at_zero(const Rational& x) {
  if (x.is_zero()) return 0;
  const Laurent& num = x.num();
  if (num.low_degree() < 0) throw AlgebraError("kashiwara_oracle: result is not in the lattice L_D");
  if (num.low_degree() > 0) return 0;
  return BigRational(num.coeff(0)) / BigRational(x.den().coeff(0));
}

} // namespace

std::optional<FlagSymbol> kashiwara_oracle(const FlagSymbol& p, int i, Chevalley which) {
  check_args(p, i);
  const auto mu = p.weight();
  const int hi_index = i == 0 ? 1 : i + 1;
  const int lo_index = i == 0 ? p.n() : i;
  const int w = mu[static_cast<std::size_t>(lo_index - 1)] - mu[static_cast<std::size_t>(hi_index - 1)];

  // [p] = sum_k f^{(k)} u_k with e u_k = 0, u_k of weight w + 2k.
  RVec u = to_rvec(ModuleVector::basis(p));
  std::vector<std::pair<int, RVec>> parts;
  while (!u.empty()) {
    int kmax = 0;
    RVec probe = u;
    while (true) {
      RVec next = apply_r(i, probe, Chevalley::e);
      if (next.empty()) break;
      probe = std::move(next);
      ++kmax;
    }
    RVec top = divided_r(i, kmax, u, Chevalley::e);
    const Laurent qb = quantum_binomial(w + 2 * kmax, kmax);
    if (qb.is_zero()) throw AlgebraError("kashiwara_oracle: string decomposition failed");
    top = scaled(top, Rational(1) / Rational(qb));
    RVec back = divided_r(i, kmax, top, Chevalley::f);
    for (const auto& [q, c] : back) add_into(u, q, -c);
    parts.emplace_back(kmax, std::move(top));
    if (parts.size() > 64) throw AlgebraError("kashiwara_oracle: string decomposition does not terminate");
  }

  RVec result;
  for (const auto& [k, uk] : parts) {
    const int target = which == Chevalley::f ? k + 1 : k - 1;
    if (target < 0) continue;
    for (const auto& [q, c] : divided_r(i, target, uk, Chevalley::f)) add_into(result, q, c);
  }

  std::optional<FlagSymbol> found;
  for (const auto& [q, c] : result) {
    const BigRational val = value_at_zero(c);
    if (val == 0) continue;
    if (val != 1 || found) throw AlgebraError("kashiwara_oracle: reduction mod v is not a basis element");
    found = q;
  }
  return found;
}

namespace {

std::vector<FlagSymbol> graph_vertices(int n, int rank, int lo, int hi, const std::optional<std::vector<int>>& weight) {
  std::vector<FlagSymbol> out;
  for (auto& p : flag_symbols_in_window(n, rank, lo, hi))
    if (!weight || p.weight() == *weight) out.push_back(std::move(p));
  return out;
}

bool in_window(const FlagSymbol& p, int lo, int hi) {
  for (int x : p.values())
    if (x < lo || x > hi) return false;
  return true;
}

std::vector<CrystalEdge> vertex_edges(const FlagSymbol& p, int lo, int hi) {
  std::vector<CrystalEdge> edges;
  for (int i = 0; i < p.n(); ++i) {
    if (auto q = kashiwara_f(p, i)) edges.push_back({p, *q, i, !in_window(*q, lo, hi)});
  }
  return edges;
}

} // namespace

CrystalGraph crystal_graph(int n, int rank, int lo, int hi, const std::optional<std::vector<int>>& weight) {
  CrystalGraph g{n, rank, lo, hi, graph_vertices(n, rank, lo, hi, weight), {}};
  std::vector<std::vector<CrystalEdge>> per(g.vertices.size());
  const auto count = static_cast<long>(g.vertices.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long v = 0; v < count; ++v) per[static_cast<std::size_t>(v)] = vertex_edges(g.vertices[static_cast<std::size_t>(v)], lo, hi);
  for (auto& e : per) g.edges.insert(g.edges.end(), e.begin(), e.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

CrystalGraph crystal_graph_serial(int n, int rank, int lo, int hi, const std::optional<std::vector<int>>& weight) {
  CrystalGraph g{n, rank, lo, hi, graph_vertices(n, rank, lo, hi, weight), {}};
  for (const auto& p : g.vertices) {
    auto e = vertex_edges(p, lo, hi);
    g.edges.insert(g.edges.end(), e.begin(), e.end());
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

} // namespace qschur
