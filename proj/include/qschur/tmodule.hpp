#pragma once

// The module T_D = sum_lambda T_lambda H_D with basis [p] = v^{x_p} T_p.

#include "qschur/hecke.hpp"

#include <map>
#include <string>
#include <vector>

namespace qschur {

/// Finite combination of flag symbols with Laurent coefficients. Used both in
/// the [p] basis (the default everywhere) and, inside this module, in the
/// T_p basis; functions that use the latter say so.
class ModuleVector {
public:
  using Terms = std::map<FlagSymbol, Laurent>;

  ModuleVector() = default;
  ModuleVector(int n, int rank) : n_(n), rank_(rank) {}
  static ModuleVector basis(const FlagSymbol& p, const Laurent& c = 1);

  int n() const { return n_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const FlagSymbol& p) const;

  void add_term(const FlagSymbol& p, const Laurent& c);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Laurent& c, const ModuleVector& x);
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  std::string to_string() const;

private:
  int n_ = 1;
  int rank_ = 1;
  Terms terms_;
};

/// Value p^{-1}(i) etc. are literal finite subsets of Z; i = 0 reads the
/// values 0 and 1.
ModuleVector apply_e(int i, const ModuleVector& x);
ModuleVector apply_f(int i, const ModuleVector& x);

enum class Chevalley { e, f };
/// e_i^{(k)} or f_i^{(k)}; the exact division by [k]! must succeed.
ModuleVector apply_divided(int i, int k, const ModuleVector& x, Chevalley which);
/// Projection onto the weight-mu component.
ModuleVector apply_idempotent(const std::vector<int>& mu, const ModuleVector& x);

/// Change of basis [p] <-> T_p.
ModuleVector to_standard(const ModuleVector& x);
ModuleVector from_standard(const ModuleVector& x);

/// Right action of T_{s_i} / T_rho^k on a vector in the T_p basis.
ModuleVector standard_times_simple(const ModuleVector& x, int i);
ModuleVector standard_times_rotation(const ModuleVector& x, int k);
/// Right action of a Hecke element on a vector in the T_p basis.
ModuleVector standard_times(const ModuleVector& x, const HeckeElement& h);

/// x * h with x in the [p] basis, letter by letter.
ModuleVector right_hecke(const ModuleVector& x, const HeckeElement& h);
/// Same product computed by expanding every T_p into its coset sum,
/// multiplying in H_D and collapsing back. Reference implementation.
ModuleVector right_hecke_reference(const ModuleVector& x, const HeckeElement& h);

/// The antilinear involution with tau([lambda]) = [lambda] and
/// tau(x T_w) = tau(x) bar(T_w).
ModuleVector tau(const ModuleVector& x);

/// Sum over k of C(#lambda^{-1}(k), 2); equals x_stat(lambda) for dominant lambda.
int x_dominant(const FlagSymbol& lambda);

} // namespace qschur
