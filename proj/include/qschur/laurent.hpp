#pragma once

// Exact Laurent polynomials in v with arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised when an algebraic invariant that the code relies on is violated
/// (non-exact division, broken triangularity, ...). These always signal a bug
/// or a wrong convention upstream, never bad user input.
class AlgebraError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Element of Z[v, v^-1]. Stored densely from the lowest nonzero exponent;
/// both ends of the coefficient vector are nonzero, so equality is structural.
class Laurent {
public:
  Laurent() = default;
  Laurent(long long c); // NOLINT(google-explicit-constructor)
  Laurent(const BigInt& c);

  static Laurent monomial(int exponent, const BigInt& c = 1);
  static Laurent v(int exponent = 1) { return monomial(exponent); }
  static Laurent from_terms(const std::map<int, BigInt>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Single term c*v^k.
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_unit() const; // +-v^k

  int low_degree() const;  // throws on zero
  int high_degree() const; // throws on zero
  BigInt coeff(int exponent) const;
  std::map<int, BigInt> terms() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  /// Multiply by v^k.
  Laurent shifted(int k) const;

  friend bool operator==(const Laurent&, const Laurent&) = default;
  friend std::strong_ordering operator<=>(const Laurent& a, const Laurent& b);

  /// Terms with exponent > 0 (resp. < 0, == 0).
  Laurent positive_part() const;
  Laurent negative_part() const;
  BigInt constant_term() const { return coeff(0); }

  /// Specialize at a nonzero rational v. Test utility only.
  BigRational eval(const BigRational& at) const;

  std::string to_string() const;

  // Dense view used by the rational-function code.
  int low() const { return low_; }
  const std::vector<BigInt>& dense() const { return coeffs_; }
  static Laurent from_dense(int low, std::vector<BigInt> coeffs);

private:
  void normalize();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// v -> v^-1.
Laurent bar(const Laurent& x);

/// Balanced quantum integer (v^k - v^-k)/(v - v^-1); [-k] = -[k].
Laurent quantum_integer(int k);
/// [k]! for k >= 0; throws std::invalid_argument for negative k.
Laurent quantum_factorial(int k);
/// [m]!/([k]![m-k]!) for 0 <= k <= m, zero otherwise.
Laurent quantum_binomial(int m, int k);

/// Exact quotient in the Laurent ring. Throws AlgebraError when den does not
/// divide num, std::invalid_argument when den is zero.
Laurent divide_exact(const Laurent& num, const Laurent& den);

/// Try the exact quotient; returns false when den does not divide num.
bool try_divide_exact(const Laurent& num, const Laurent& den, Laurent& out);

std::ostream& operator<<(std::ostream& os, const Laurent& x);

} // namespace qschur
