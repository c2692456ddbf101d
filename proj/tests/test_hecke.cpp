#include "qschur/hecke.hpp"

#include <doctest.h>

using namespace qschur;

namespace {

const Laurent v2 = Laurent::v(2);
const Laurent vm2 = Laurent::v(-2);

HeckeElement T(const AffinePermutation& w, const Laurent& c = 1) { return HeckeElement::basis(w, c); }

} // namespace

TEST_CASE("multiplication by simple reflections") {
  const auto e = AffinePermutation::identity(3);
  const auto s1 = AffinePermutation::simple(3, 1);
  const auto s2 = AffinePermutation::simple(3, 2);
  CHECK(mul_by_simple(T(e), 1, Side::right) == T(s1));
  CHECK(mul_by_simple(T(s1), 1, Side::right) == T(s1, vm2 - 1) + T(e, vm2));
  CHECK(mul_by_simple(T(s1 * s2), 1, Side::right) == T(s1 * s2 * s1));
  CHECK(mul(T(s1), T(s1)) == T(s1, vm2 - 1) + T(e, vm2));
  CHECK(mul(T(s1 * s2), T(e)) == T(s1 * s2));
  CHECK(mul(mul(T(s1), T(s2)), T(s1)) == mul(mul(T(s2), T(s1)), T(s2)));
}

TEST_CASE("inverses and bar") {
  const auto e = AffinePermutation::identity(2);
  const auto s = AffinePermutation::simple(2, 1);
  CHECK(inverse_of_Tw(e) == T(e));
  CHECK(inverse_of_Tw(s) == T(s, v2) + T(e, v2 - 1));
  const auto rho = AffinePermutation::rotation(2, 1);
  CHECK(inverse_of_Tw(rho) == T(rho.inverse()));
  CHECK(bar(T(e)) == T(e));
  CHECK(bar(T(s)) == T(s, v2) + T(e, v2 - 1));
  CHECK(bar(T(e, Laurent::v())) == T(e, Laurent::v(-1)));
  // bar is a ring homomorphism and an involution.
  const HeckeElement a = T(AffinePermutation({0, 5, 1}), Laurent::v(3) + 2) + T(AffinePermutation::simple(3, 0), -1);
  const HeckeElement b = T(AffinePermutation({2, 1, 3}), Laurent::v(-1)) + T(AffinePermutation::rotation(3, 1));
  CHECK(bar(bar(a)) == a);
  CHECK(bar(mul(a, b)) == mul(bar(a), bar(b)));
  CHECK(mul(mul(a, b), a) == mul(a, mul(b, a)));
}

TEST_CASE("coset sums") {
  const FlagSymbol lambda(2, {1, 1});
  const auto e = AffinePermutation::identity(2);
  const auto s = AffinePermutation::simple(2, 1);
  CHECK(coset_sum(lambda, lambda) == T(e) + T(s));
  CHECK(double_coset_sum(lambda, lambda, diagonal_matrix(lambda)) == T(e) + T(s));
  const FlagSymbol mu(2, {1, 2});
  CHECK(coset_sum(mu, FlagSymbol(2, {2, 1})) == T(s));
}

TEST_CASE("Bernstein elements") {
  for (int d = 2; d <= 3; ++d)
    for (int j = 1; j <= d; ++j) {
      CHECK(mul(bernstein_X(d, j), bernstein_X_inverse(d, j)) == HeckeElement::one(d));
      for (int i = 1; i < d; ++i) {
        const HeckeElement ti = T(AffinePermutation::simple(d, i));
        if (i == j) CHECK(mul(mul(ti, bernstein_X(d, i)), ti) == vm2 * bernstein_X(d, i + 1));
        if (j != i && j != i + 1) CHECK(mul(bernstein_X(d, j), ti) == mul(ti, bernstein_X(d, j)));
      }
    }
}
