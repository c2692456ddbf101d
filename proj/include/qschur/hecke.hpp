#pragma once

// Affine Hecke algebra of type GL_D in the T_w basis, with the quadratic
// relation (T_i + 1)(T_i - v^-2) = 0.

#include "qschur/affine_weyl.hpp"
#include "qschur/flag_comb.hpp"
#include "qschur/laurent.hpp"

#include <map>

namespace qschur {

class HeckeElement {
public:
  using Terms = std::map<AffinePermutation, Laurent>;

  explicit HeckeElement(int rank = 1) : rank_(rank) {}
  /// c * T_w.
  static HeckeElement basis(const AffinePermutation& w, const Laurent& c = 1);
  static HeckeElement one(int rank) { return basis(AffinePermutation::identity(rank)); }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const AffinePermutation& w) const;

  void add_term(const AffinePermutation& w, const Laurent& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const Laurent& c, const HeckeElement& h);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  std::string to_string() const;

private:
  int rank_;
  Terms terms_;
};

enum class Side { left, right };

/// h * T_{s_i} (right) or T_{s_i} * h (left).
HeckeElement mul_by_simple(const HeckeElement& h, int i, Side side);
/// h * T_rho^k (right) or T_rho^k * h (left); k may be negative.
HeckeElement mul_by_rotation(const HeckeElement& h, int k, Side side);
HeckeElement mul(const HeckeElement& a, const HeckeElement& b);

HeckeElement inverse_of_Tw(const AffinePermutation& w);
/// bar(T_w) = T_{w^-1}^{-1}, v -> v^-1 on coefficients.
HeckeElement bar(const HeckeElement& h);

/// T_p: sum of T_w over the coset of w with (lambda)w = p.
HeckeElement coset_sum(const FlagSymbol& lambda, const FlagSymbol& p);
/// T_s: sum of T_w over the double coset of class s in S_lambda \ S / S_mu.
HeckeElement double_coset_sum(const FlagSymbol& lambda, const FlagSymbol& mu, const PeriodicMatrix& s);

/// T_{t_mu} for the translation window of mu.
HeckeElement translation_T(const std::vector<int>& mu);
/// X_j realized through translation windows: with [w] = v^{l(w)} T_w and
/// omega_j = e_1 + ... + e_j, X_j = [t(omega_{j-1})] * [t(omega_j)]^{-1}.
HeckeElement bernstein_X(int rank, int j);
/// X_j^{-1}.
HeckeElement bernstein_X_inverse(int rank, int j);

} // namespace qschur
