#include "qschur/rational.hpp"

#include <doctest.h>

using namespace qschur;

namespace {

const Laurent v = Laurent::v();
const Laurent vi = Laurent::v(-1);

// (x^k - x^-k) / (x - x^-1) at a rational point.
BigRational quantum_at(int k, const BigRational& x) {
  BigRational up = 1, down = 1;
  for (int j = 0; j < k; ++j) up *= x, down /= x;
  return (up - down) / (x - 1 / x);
}

} // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(0).is_zero());
  CHECK(quantum_integer(2) == v + vi);
  CHECK(quantum_integer(3) == Laurent::v(2) + 1 + Laurent::v(-2));
  CHECK(quantum_integer(-3) == -quantum_integer(3));
  for (int k = 1; k <= 9; ++k)
    for (BigRational x : {BigRational(2), BigRational(3, 2), BigRational(-5, 7)})
      CHECK(quantum_integer(k).eval(x) == quantum_at(k, x));
}

TEST_CASE("quantum factorials and binomials") {
  CHECK(quantum_factorial(0) == 1);
  CHECK(quantum_factorial(2) == v + vi);
  CHECK(quantum_factorial(3) == (v + vi) * (Laurent::v(2) + 1 + Laurent::v(-2)));
  CHECK_THROWS_AS(quantum_factorial(-1), std::invalid_argument);
  // Pascal rule [m,k] = v^k [m-1,k] + v^{k-m} [m-1,k-1].
  for (int m = 1; m <= 8; ++m)
    for (int k = 1; k < m; ++k)
      CHECK(quantum_binomial(m, k) == Laurent::v(k) * quantum_binomial(m - 1, k) +
                                          Laurent::v(k - m) * quantum_binomial(m - 1, k - 1));
  CHECK(quantum_binomial(3, 5).is_zero());
}

TEST_CASE("bar involution") {
  CHECK(bar(v) == vi);
  CHECK(bar(Laurent(1)) == 1);
  CHECK(bar(Laurent::v(2) + 3 * vi) == Laurent::v(-2) + 3 * v);
  const Laurent x = 5 * Laurent::v(4) - 2 * v + 7 * Laurent::v(-3);
  CHECK(bar(bar(x)) == x);
  CHECK(bar(x * (v + 2)) == bar(x) * bar(v + 2));
}

TEST_CASE("exact division") {
  CHECK(divide_exact(Laurent::v(2) - Laurent::v(-2), v - vi) == v + vi);
  const Laurent x = 3 * Laurent::v(5) - v + 11;
  CHECK(divide_exact(x, 1) == x);
  CHECK(divide_exact(Laurent(), v + 1).is_zero());
  CHECK_THROWS_AS(divide_exact(Laurent(1), v + vi), AlgebraError);
  CHECK_THROWS_AS(divide_exact(x, Laurent()), std::invalid_argument);
  // Product then quotient is the identity.
  for (int k = 1; k <= 6; ++k) CHECK(divide_exact(x * quantum_factorial(k), quantum_factorial(k)) == x);
}

TEST_CASE("big coefficients stay exact") {
  Laurent x = 1;
  for (int k = 0; k < 40; ++k) x *= Laurent(1000003) * v + 1;
  CHECK(x.coeff(40) == boost::multiprecision::pow(BigInt(1000003), 40));
  CHECK(divide_exact(x, Laurent(1000003) * v + 1).coeff(39) == boost::multiprecision::pow(BigInt(1000003), 39));
}

TEST_CASE("rational functions") {
  const Rational a(v + 1, v - 1);
  CHECK(a * Rational(v - 1) == Rational(v + 1));
  CHECK((a - a).is_zero());
  CHECK(Rational(v * v - 1, v - 1).to_laurent() == v + 1);
  CHECK_THROWS_AS(a.to_laurent(), AlgebraError);
  CHECK(bar(bar(a)) == a);
  CHECK(Rational(Laurent::v(2), Laurent::v(3)) == Rational(vi));
}
