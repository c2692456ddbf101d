#pragma once

// Canonical bases: a generic bar-invariant triangular solver over an
// explicitly discovered bar system, and its T_D and S_D instances.

#include "qschur/schur.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace qschur {

class CapExceeded : public AlgebraError {
public:
  CapExceeded(std::size_t cap, const std::string& what)
      : AlgebraError("support cone of " + what + " exceeds the bound of " + std::to_string(cap) + " labels"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

struct SolverOptions {
  std::size_t cap = 10000;
  // Random tie-break in the processing order; used by the determinism check.
  std::optional<std::uint64_t> shuffle_seed;
};

template <typename Label>
struct BarSystem {
  std::vector<Label> labels;                             // sorted
  std::map<Label, std::map<Label, Laurent>> bar;         // bar([x]) expansion
};

template <typename Label>
struct CanonicalExpansion {
  Label leading;
  std::map<Label, Laurent> terms;
  friend bool operator==(const CanonicalExpansion&, const CanonicalExpansion&) = default;
};

/// Closure of {x} under bar-supports. Throws CapExceeded past opts.cap labels.
template <typename Label, typename BarFn>
BarSystem<Label> discover_system(const Label& x, BarFn&& bar_of, std::size_t cap, const std::string& what) {
  BarSystem<Label> sys;
  std::deque<Label> todo{x};
  std::set<Label> seen{x};
  while (!todo.empty()) {
    Label y = todo.front();
    todo.pop_front();
    auto image = bar_of(y);
    for (const auto& [z, c] : image)
      if (seen.insert(z).second) {
        if (seen.size() > cap) throw CapExceeded(cap, what);
        todo.push_back(z);
      }
    sys.bar.emplace(std::move(y), std::move(image));
  }
  sys.labels.assign(seen.begin(), seen.end());
  return sys;
}

/// The unique bar-fixed b_x = [x] + sum_{y < x} c_y [y] with c_y in vZ[v].
template <typename Label>
CanonicalExpansion<Label> solve_canonical(const BarSystem<Label>& sys, const Label& x, const SolverOptions& opts = {}) {
  // Unitriangularity and the order "y < z if y appears in bar([z])".
  std::map<Label, int> indegree;
  for (const auto& y : sys.labels) indegree[y] = 0;
  for (const auto& [z, image] : sys.bar) {
    auto self = image.find(z);
    if (self == image.end() || !self->second.is_one())
      throw AlgebraError("solve_canonical: bar matrix is not unitriangular at a diagonal entry");
    for (const auto& [y, c] : image)
      if (!(y == z)) {
        auto it = indegree.find(y);
        if (it == indegree.end()) throw AlgebraError("solve_canonical: bar system is not closed");
        ++it->second;
      }
  }
  // Topological order from x downwards; ties broken by label or at random.
  std::vector<Label> ready;
  for (const auto& [y, d] : indegree)
    if (d == 0) ready.push_back(y);
  std::mt19937_64 rng(opts.shuffle_seed.value_or(0));
  std::vector<Label> order;
  while (!ready.empty()) {
    std::size_t pick = 0;
    if (opts.shuffle_seed) pick = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
    Label z = ready[pick];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
    order.push_back(z);
    for (const auto& [y, c] : sys.bar.at(z))
      if (!(y == z) && --indegree[y] == 0) ready.push_back(y);
  }
  if (order.size() != sys.labels.size()) throw AlgebraError("solve_canonical: bar-support order has a cycle");

  // c_y - bar(c_y) = sum_{z > y} bar(c_z) r_{zy}; accumulated as z is finalized.
  std::map<Label, Laurent> pending;
  CanonicalExpansion<Label> out{x, {}};
  for (const auto& z : order) {
    Laurent cz;
    if (z == x) {
      cz = 1;
    } else {
      const Laurent q = pending[z];
      cz = q.positive_part();
      if (q.constant_term() != 0 || !(q == cz - bar(cz)))
        throw AlgebraError("solve_canonical: discrepancy is not of the form p - bar(p) with p in vZ[v]");
    }
    if (cz.is_zero()) continue;
    out.terms.emplace(z, cz);
    const Laurent bz = bar(cz);
    for (const auto& [y, r] : sys.bar.at(z))
      if (!(y == z)) pending[y] += bz * r;
  }
  return out;
}

// ---------------------------------------------------------------- T_D

using CanonicalT = CanonicalExpansion<FlagSymbol>;
using CanonicalS = CanonicalExpansion<PeriodicMatrix>;

/// tau([p]) as a label map.
std::map<FlagSymbol, Laurent> tau_expansion(const FlagSymbol& p);
std::map<PeriodicMatrix, Laurent> tau_expansion(const PeriodicMatrix& s);

/// b_p; results are memoized (thread-safe) unless a shuffle seed is given.
CanonicalT canonical_tmodule(const FlagSymbol& p, const SolverOptions& opts = {});
/// b_s under the twisted tau of S_D.
CanonicalS canonical_schur(const PeriodicMatrix& s, const SolverOptions& opts = {});

ModuleVector to_vector(const CanonicalT& b);
SchurElement to_element(const CanonicalS& b);

/// Nonzero (i, dim_i) with c_q = sum_i v^{-i + x_p - x_q} dim_i (y-statistics for S_D).
struct KlData {
  std::vector<std::pair<int, BigInt>> pairs;
  bool consistent = true; // all dims >= 0
};
KlData kl_coefficients(const CanonicalT& b, const FlagSymbol& q);
KlData kl_coefficients(const CanonicalS& b, const PeriodicMatrix& q);

/// Checks on one expansion: tau-fixed, leading coefficient 1, others in vZ[v].
bool is_canonical(const CanonicalT& b);
bool is_canonical(const CanonicalS& b);
/// Schur canonical element as a T-module vector: v^{x_mu} * sum c_t v^{y_t} T_t
/// in the [p] basis. Compatibility means this is b_p for a flag p of s.
ModuleVector schur_canonical_as_tvector(const CanonicalS& b);

/// Tables over a window / band. OpenMP over leading labels; *_serial are
/// the sequential references.
std::vector<CanonicalT> canonical_table_t(int n, int rank, int lo, int hi);
std::vector<CanonicalT> canonical_table_t_serial(int n, int rank, int lo, int hi);
std::vector<CanonicalS> canonical_table_s(int n, int rank, int band);
std::vector<CanonicalS> canonical_table_s_serial(int n, int rank, int band);

void clear_canonical_caches();

} // namespace qschur
