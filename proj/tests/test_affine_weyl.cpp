#include "qschur/affine_weyl.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qschur;

namespace {

// Inversions (i, j), i in [1, D], i < j, w(i) > w(j); j ranges far enough.
int brute_length(const AffinePermutation& w) {
  const int d = w.rank();
  int c = 0;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= i + 8 * d; ++j) c += w(i) > w(j);
  return c;
}

} // namespace

TEST_CASE("length") {
  CHECK(length(AffinePermutation::identity(3)) == 0);
  CHECK(length(AffinePermutation({2, 1})) == 1);
  CHECK(length(AffinePermutation({3, 2})) == 1);
  for (const auto& win : std::vector<std::vector<int>>{{3, 2}, {4, -1}, {0, 5, 1}, {-3, 8, 1}, {2, 7, -3, 4}})
    CHECK(length(AffinePermutation(win)) == brute_length(AffinePermutation(win)));
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(AffinePermutation::identity(3)) == ReducedWord{0, {}});
  for (int d = 2; d <= 4; ++d) {
    const auto rho = AffinePermutation::rotation(d, 1);
    CHECK(length(rho) == 0);
    CHECK(reduced_word(rho) == ReducedWord{1, {}});
  }
  const AffinePermutation w({3, 2});
  const ReducedWord r = reduced_word(w);
  CHECK(r.rotation == 1);
  CHECK(r.letters.size() == 1);
  CHECK(from_word(2, r) == w);
  for (const auto& win : std::vector<std::vector<int>>{{4, -1}, {0, 5, 1}, {-3, 8, 1}, {2, 7, -3, 4}}) {
    const AffinePermutation x(win);
    const ReducedWord rw = reduced_word(x);
    CHECK(static_cast<int>(rw.letters.size()) == length(x));
    CHECK(from_word(x.rank(), rw) == x);
  }
}

TEST_CASE("group structure") {
  const AffinePermutation x({0, 5, 1});
  CHECK(x * x.inverse() == AffinePermutation::identity(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(x.times_simple(i) == x * AffinePermutation::simple(3, i));
    CHECK(x.simple_times(i) == AffinePermutation::simple(3, i) * x);
    CHECK(right_ascent(x, i) == (length(x.times_simple(i)) > length(x)));
  }
  CHECK_THROWS(AffinePermutation({1, 1}));
}

TEST_CASE("Bruhat order") {
  const AffinePermutation s({2, 1});
  CHECK(bruhat_leq(s, s) == BruhatResult::less_or_equal);
  CHECK(bruhat_leq(AffinePermutation::identity(2), s) == BruhatResult::less_or_equal);
  CHECK(bruhat_leq(s, s.times_simple(0)) == BruhatResult::less_or_equal);
  CHECK(bruhat_leq(s.times_simple(0), s) == BruhatResult::not_less_or_equal);
  CHECK(bruhat_leq(s, AffinePermutation::rotation(2, 1)) == BruhatResult::incomparable_classes);
}

TEST_CASE("text round trip") {
  const AffinePermutation x({-3, 8, 1});
  CHECK(AffinePermutation::parse(x.to_text()) == x);
  CHECK_THROWS(AffinePermutation::parse("D=2;[1,1]"));
}

TEST_CASE("double cosets") {
  const std::vector<int> one{1, 1};
  const AffinePermutation s({2, 1});
  CHECK(min_double_coset_rep(one, s, one) == AffinePermutation::identity(2));
  CHECK(enumerate_double_coset(one, one, AffinePermutation::identity(2)).size() == 2);
  CHECK(enumerate_double_coset(one, {1, 2}, AffinePermutation::identity(2)).size() == 2);
  // Singleton blocks: the coset is the representative itself.
  const AffinePermutation w({0, 5, 1});
  CHECK(min_double_coset_rep({1, 2, 3}, w, {1, 2, 3}) == w);
  // The representative is the shortest element of the enumerated coset.
  const std::vector<int> lam{1, 1, 2};
  for (const auto& win : std::vector<std::vector<int>>{{0, 5, 1}, {2, 1, 3}, {-3, 8, 1}}) {
    const AffinePermutation x(win);
    const AffinePermutation rep = min_double_coset_rep(lam, x, lam);
    const auto all = enumerate_double_coset(lam, lam, rep);
    CHECK(std::find(all.begin(), all.end(), x) != all.end());
    for (const auto& y : all) CHECK(length(rep) <= length(y));
  }
  CHECK(young_subgroup({1, 1, 2}).order() == 2);
}
