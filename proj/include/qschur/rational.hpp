#pragma once

// Rational functions in v over Q, used for exact linear solves.

#include "qschur/laurent.hpp"

namespace qschur {

/// num/den in lowest terms. The denominator is a polynomial with nonzero
/// constant term and positive constant coefficient; every power of v lives in
/// the numerator, so equal values have equal representations.
class Rational {
public:
  Rational() : den_(1) {}
  Rational(const Laurent& x) : num_(x), den_(1) {} // NOLINT(google-explicit-constructor)
  Rational(long long c) : num_(c), den_(1) {}     // NOLINT(google-explicit-constructor)
  Rational(const Laurent& num, const Laurent& den);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Z[v, v^-1].
  bool is_laurent() const { return den_.is_one(); }
  /// Throws AlgebraError when the value is not a Laurent polynomial.
  Laurent to_laurent() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;

  /// Total degree spread of numerator and denominator; pivot heuristic.
  int complexity() const;

  std::string to_string() const;

private:
  void reduce();
  Laurent num_;
  Laurent den_;
};

Rational bar(const Rational& x);

/// gcd of two polynomials with integer coefficients given as dense arrays
/// (index = degree). Result is primitive up to the integer content gcd, with
/// positive leading coefficient.
std::vector<BigInt> poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b);

} // namespace qschur
