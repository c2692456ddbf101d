#include "qschur/canonical.hpp"

#include <mutex>
#include <shared_mutex>

namespace qschur {

std::map<FlagSymbol, Laurent> tau_expansion(const FlagSymbol& p) { return tau(ModuleVector::basis(p)).terms(); }

std::map<PeriodicMatrix, Laurent> tau_expansion(const PeriodicMatrix& s) {
  return tau_schur(SchurElement::basis(s)).terms();
}

namespace {

template <typename Label>
class ResultCache {
public:
  std::optional<CanonicalExpansion<Label>> find(const Label& x) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(x);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const CanonicalExpansion<Label>& b) {
    std::unique_lock lock(mutex_);
    map_.emplace(b.leading, b);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Label, CanonicalExpansion<Label>> map_;
};

ResultCache<FlagSymbol>& t_cache() {
  static ResultCache<FlagSymbol> c;
  return c;
}

ResultCache<PeriodicMatrix>& s_cache() {
  static ResultCache<PeriodicMatrix> c;
  return c;
}

template <typename Label>
CanonicalExpansion<Label> solve_with_cache(ResultCache<Label>& cache, const Label& x, const SolverOptions& opts) {
  const bool use_cache = !opts.shuffle_seed;
  if (use_cache)
    if (auto hit = cache.find(x)) return *hit;
  const auto sys = discover_system(
      x, [](const Label& y) { return tau_expansion(y); }, opts.cap, x.to_text());
  auto b = solve_canonical(sys, x, opts);
  if (use_cache) cache.store(b);
  return b;
}

template <typename Label>
bool leading_and_lattice(const CanonicalExpansion<Label>& b) {
  auto it = b.terms.find(b.leading);
  if (it == b.terms.end() || !it->second.is_one()) return false;
  for (const auto& [q, c] : b.terms)
    if (!(q == b.leading) && c.low_degree() < 1) return false;
  return true;
}

KlData invert_grading(const Laurent& c, int shift) {
  // c = sum_i v^{-i + shift} dim_i.
  KlData out;
  for (const auto& [k, a] : c.terms()) {
    out.pairs.emplace_back(shift - k, a);
    if (a < 0) out.consistent = false;
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

} // namespace

CanonicalT canonical_tmodule(const FlagSymbol& p, const SolverOptions& opts) { return solve_with_cache(t_cache(), p, opts); }

CanonicalS canonical_schur(const PeriodicMatrix& s, const SolverOptions& opts) {
  return solve_with_cache(s_cache(), s, opts);
}

void clear_canonical_caches() {
  t_cache().clear();
  s_cache().clear();
}

ModuleVector to_vector(const CanonicalT& b) {
  ModuleVector x(b.leading.n(), b.leading.rank());
  for (const auto& [q, c] : b.terms) x.add_term(q, c);
  return x;
}

SchurElement to_element(const CanonicalS& b) {
  SchurElement x(b.leading.n(), b.leading.rank());
  for (const auto& [t, c] : b.terms) x.add_term(t, c);
  return x;
}

KlData kl_coefficients(const CanonicalT& b, const FlagSymbol& q) {
  auto it = b.terms.find(q);
  if (it == b.terms.end()) return {};
  return invert_grading(it->second, x_stat(b.leading) - x_stat(q));
}

KlData kl_coefficients(const CanonicalS& b, const PeriodicMatrix& q) {
  auto it = b.terms.find(q);
  if (it == b.terms.end()) return {};
  return invert_grading(it->second, y_stat(b.leading) - y_stat(q));
}

bool is_canonical(const CanonicalT& b) {
  const ModuleVector x = to_vector(b);
  return leading_and_lattice(b) && tau(x) == x;
}

bool is_canonical(const CanonicalS& b) {
  const SchurElement x = to_element(b);
  return leading_and_lattice(b) && tau_schur(x) == x;
}

ModuleVector schur_canonical_as_tvector(const CanonicalS& b) {
  const PeriodicMatrix& s = b.leading;
  ModuleVector standard(s.n(), s.rank());
  for (const auto& [t, c] : b.terms) standard += c.shifted(y_stat(t)) * standard_vector(t);
  return Laurent::v(x_dominant(s.col_dominant())) * from_standard(standard);
}

namespace {

template <typename Label, typename Solve>
std::vector<CanonicalExpansion<Label>> table_parallel(const std::vector<Label>& labels, Solve solve) {
  std::vector<std::optional<CanonicalExpansion<Label>>> out(labels.size());
  const auto count = static_cast<long>(labels.size());
  std::vector<std::string> errors(labels.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      out[idx] = solve(labels[idx]);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  std::vector<CanonicalExpansion<Label>> result;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!out[k]) throw AlgebraError(errors[k]);
    result.push_back(std::move(*out[k]));
  }
  return result;
}

} // namespace

std::vector<CanonicalT> canonical_table_t(int n, int rank, int lo, int hi) {
  return table_parallel(flag_symbols_in_window(n, rank, lo, hi), [](const FlagSymbol& p) { return canonical_tmodule(p); });
}

std::vector<CanonicalT> canonical_table_t_serial(int n, int rank, int lo, int hi) {
  std::vector<CanonicalT> out;
  for (const auto& p : flag_symbols_in_window(n, rank, lo, hi)) {
    const auto sys = discover_system(p, [](const FlagSymbol& y) { return tau_expansion(y); }, SolverOptions{}.cap, p.to_text());
    out.push_back(solve_canonical(sys, p));
  }
  return out;
}

std::vector<CanonicalS> canonical_table_s(int n, int rank, int band) {
  return table_parallel(matrices_in_band(n, rank, band), [](const PeriodicMatrix& s) { return canonical_schur(s); });
}

std::vector<CanonicalS> canonical_table_s_serial(int n, int rank, int band) {
  std::vector<CanonicalS> out;
  for (const auto& s : matrices_in_band(n, rank, band)) {
    const auto sys =
        discover_system(s, [](const PeriodicMatrix& y) { return tau_expansion(y); }, SolverOptions{}.cap, s.to_text());
    out.push_back(solve_canonical(sys, s));
  }
  return out;
}

} // namespace qschur
