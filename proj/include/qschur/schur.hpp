#pragma once

// The affine q-Schur algebra S_D = sum H_{lambda mu} in the [s] basis, the
// homomorphism Phi_D on monomials, the sign character and the twist psi.

#include "qschur/tmodule.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qschur {

/// Finite combination of periodic matrices; the block of a term is
/// (row_dominant, col_dominant) of its matrix.
class SchurElement {
public:
  using Terms = std::map<PeriodicMatrix, Laurent>;

  SchurElement() = default;
  SchurElement(int n, int rank) : n_(n), rank_(rank) {}
  static SchurElement basis(const PeriodicMatrix& s, const Laurent& c = 1);
  /// [^delta lambda].
  static SchurElement idempotent(const FlagSymbol& lambda);

  int n() const { return n_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const PeriodicMatrix& s) const;

  void add_term(const PeriodicMatrix& s, const Laurent& c);
  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
  friend SchurElement operator*(const Laurent& c, const SchurElement& x);
  friend bool operator==(const SchurElement&, const SchurElement&) = default;

  /// Terms grouped by block (lambda, mu).
  std::map<std::pair<FlagSymbol, FlagSymbol>, SchurElement> blocks() const;
  std::string to_string() const;

private:
  int n_ = 1;
  int rank_ = 0;
  Terms terms_;
};

/// Sum of T_p over the flags of s: T_s as a vector of T_lambda H_D (T_p basis).
ModuleVector standard_vector(const PeriodicMatrix& s);
/// Inverse of x -> x(T_mu): read a T_p-basis vector of T_lambda H_D lying in
/// H_{lambda mu} back as a Schur element. Throws AlgebraError if it does not
/// collapse onto double coset sums.
SchurElement collapse_to_schur(const ModuleVector& standard, const FlagSymbol& mu);

/// Action of S_D on T_D (both sides in their normalized bases).
ModuleVector schur_act(const SchurElement& a, const ModuleVector& x);
/// Product a * b (b applied first).
SchurElement schur_mul(const SchurElement& a, const SchurElement& b);
/// Serial product without the basis-product memo, for testing.
SchurElement schur_mul_reference(const SchurElement& a, const SchurElement& b);
/// tau([s]) = v^{-2 x_mu} bar([s]).
SchurElement tau_schur(const SchurElement& x);

// ------------------------------------------------------------- monomials

struct UdotLetter {
  Chevalley which = Chevalley::e;
  int residue = 0;
  int power = 1;
  friend bool operator==(const UdotLetter&, const UdotLetter&) = default;
  friend auto operator<=>(const UdotLetter&, const UdotLetter&) = default;
};

/// letters[0] ... letters[r-1] a_weight (letters act right to left).
struct UdotMonomial {
  std::vector<UdotLetter> letters;
  std::vector<int> weight;
  friend bool operator==(const UdotMonomial&, const UdotMonomial&) = default;
  friend auto operator<=>(const UdotMonomial&, const UdotMonomial&) = default;
  std::string to_text() const;
};

/// Weight change of a letter: +(omega_i - omega_{i+1}) * power for e.
std::vector<int> letter_weight_shift(int n, const UdotLetter& l);
/// Weight after applying all letters to a_weight (may have negative entries).
std::vector<int> output_weight(const UdotMonomial& m);
/// Sum over letters of (#f - #e) counted with powers.
int monomial_degree(const UdotMonomial& m);

enum class GeneratorKind { a, e, f };
/// Phi_D(a_{#lambda}), Phi_D(a_{#lambda} e_i), Phi_D(f_i a_{#lambda}); zero when the
/// generator matrix would have a negative entry.
SchurElement phi_generator(GeneratorKind kind, int i, const FlagSymbol& lambda);
/// Phi_D(m) for the given rank; zero when sum(weight) != rank or a weight
/// along the way leaves N^n.
SchurElement phi_monomial(const UdotMonomial& m, int rank);
/// m acting on x through the explicit formulas for e_i, f_i on T_D.
ModuleVector act_monomial(const UdotMonomial& m, const ModuleVector& x);

/// Sign character on S_n: zero off the block of (1, 2, ..., n); T_w -> (-1)^{l(w)},
/// T_rho -> 1.
Laurent epsilon_sign(const SchurElement& x);

enum class PsiReading {
  dominant_window, // v^{sum(lambda window) - sum(mu window)}, lambda, mu dominant
  weight,          // v^{sum(#lambda - #mu)}; always exponent 0
  matrix_degree,   // v^{sum_ij s_ij (i - j)} on each [s]
};
std::string to_string(PsiReading r);
std::optional<PsiReading> psi_reading_from_string(const std::string& s);
SchurElement psi_twist(const SchurElement& x, PsiReading reading, bool inverse = false);

/// Drop cached basis products (used by benchmarks and tests).
void clear_schur_caches();

} // namespace qschur
