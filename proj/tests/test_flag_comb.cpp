#include "qschur/flag_comb.hpp"

#include <doctest.h>

using namespace qschur;

namespace {

FlagSymbol flag(int n, std::vector<int> w) { return FlagSymbol(n, std::move(w)); }

// #{(k, l) : p(k) in [1, n], k < l, p(k) >= p(l)} by scanning a wide range.
int brute_x(const FlagSymbol& p) {
  const int d = p.rank();
  const int n = p.n();
  int c = 0;
  for (int k = -12 * d; k <= 12 * d; ++k) {
    if (p(k) < 1 || p(k) > n) continue;
    for (int l = k + 1; l <= k + 24 * d; ++l) c += p(k) >= p(l);
  }
  return c;
}

// sum s_ij s_kl over i >= k, j < l, i in [1, n].
long brute_y(const PeriodicMatrix& s) {
  const int n = s.n();
  const int r = 4 * s.rank() + 4 * n;
  long c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i - r; j <= i + r; ++j) {
      const int a = s.at(i, j);
      if (!a) continue;
      for (int k = i - 2 * r; k <= i; ++k)
        for (int l = j + 1; l <= k + r; ++l) c += static_cast<long>(a) * s.at(k, l);
    }
  return c;
}

} // namespace

TEST_CASE("x statistic") {
  CHECK(x_stat(flag(2, {1, 2})) == 0);
  CHECK(x_stat(flag(2, {2, 1})) == 1);
  CHECK(x_stat(flag(3, {1, 2, 3})) == 0);
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& p : flag_symbols_in_window(n, d, 1 - n, 2 * n)) CHECK(x_stat(p) == brute_x(p));
}

TEST_CASE("y statistic") {
  for (const auto& lambda : dominant_symbols(2, 3)) CHECK(y_stat(diagonal_matrix(lambda)) == 0);
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& s : matrices_in_band(n, d, 2)) CHECK(y_stat(s) == brute_y(s));
}

TEST_CASE("generator matrices") {
  const FlagSymbol lambda = flag(2, {1, 2});
  const auto m = generator_matrices(lambda, 1);
  REQUIRE(m);
  CHECK(m->first == PeriodicMatrix(2, {{1, 2, 1}, {2, 2, 1}}));
  CHECK(m->second == m->first.transpose());
  CHECK(y_stat(m->first) == lambda.weight()[0] - 1);
  CHECK(y_stat(m->second) == lambda.weight()[1]);
  CHECK_FALSE(generator_matrices(flag(2, {2, 2}), 1));
}

TEST_CASE("matrix of a pair") {
  const FlagSymbol lambda = flag(2, {1, 1});
  CHECK(matrix_of_pair(lambda, lambda) == diagonal_matrix(lambda));
  CHECK(matrix_of_pair(flag(2, {1, 1}), flag(2, {1, 2})) == PeriodicMatrix(2, {{1, 1, 1}, {1, 2, 1}}));
  for (const auto& s : matrices_in_band(2, 3, 2)) {
    const auto flags = flags_of_matrix(s);
    CHECK(flags.size() == flags_of_matrix_count(s));
    for (const auto& p : flags) CHECK(matrix_of_pair(p, s.col_dominant()) == s);
  }
}

TEST_CASE("aperiodicity") {
  for (const auto& lambda : dominant_symbols(2, 3)) CHECK(is_aperiodic(diagonal_matrix(lambda)));
  CHECK_FALSE(is_aperiodic(PeriodicMatrix(1, {{1, 1, 1}, {1, 2, 1}})));
  CHECK(is_aperiodic(PeriodicMatrix(2, {{1, 2, 1}, {2, 2, 1}})));
}

TEST_CASE("order hint") {
  const PeriodicMatrix s(2, {{1, 1, 1}, {1, 2, 1}, {2, 2, 1}});
  CHECK(order_hint(s, s) == OrderHint::equal);
  const PeriodicMatrix t(2, {{1, 2, 1}, {1, 3, 1}, {2, 2, 1}});
  CHECK(order_hint(t, s) == OrderHint::definitely_not_leq);
  const PeriodicMatrix u(2, {{1, 1, 1}, {1, 0, 1}, {2, 2, 1}});
  CHECK(order_hint(u, s) == OrderHint::consistent);
}

TEST_CASE("action on flag symbols") {
  CHECK(act_on_flag_symbol(flag(2, {1, 2}), AffinePermutation::identity(2)) == flag(2, {1, 2}));
  CHECK(act_on_flag_symbol(flag(2, {1, 2}), AffinePermutation({2, 1})) == flag(2, {2, 1}));
  CHECK(act_on_flag_symbol(flag(2, {1, 1}), AffinePermutation::translation({1, 0})) == flag(2, {3, 1}));
  for (const auto& p : flag_symbols_in_window(2, 3, 0, 3)) {
    const AffinePermutation w = min_coset_rep(p);
    CHECK(act_on_flag_symbol(p.dominant(), w) == p);
    for (const auto& y : coset_elements(p)) CHECK(length(w) <= length(y));
  }
}

TEST_CASE("text round trip") {
  const FlagSymbol p = flag(2, {2, 1});
  CHECK(p.to_text() == "n=2;D=2;[2,1]");
  CHECK(FlagSymbol::parse(p.to_text()) == p);
  CHECK_THROWS(FlagSymbol::parse("n=2;D=3;[2,1]"));
}
