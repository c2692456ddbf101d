#include "qschur/canonical.hpp"

#include <doctest.h>

using namespace qschur;

namespace {

const Laurent v = Laurent::v();

bool in_vzv(const Laurent& c) { return c == c.positive_part(); }

// Defining properties checked with the tmodule involution, not the solver.
void check_b(const CanonicalT& b) {
  const ModuleVector x = to_vector(b);
  CHECK(tau(x) == x);
  CHECK(x.coeff(b.leading) == 1);
  for (const auto& [q, c] : x.terms())
    if (!(q == b.leading)) CHECK(in_vzv(c));
}

} // namespace

TEST_CASE("generic solver on a hand-made system") {
  BarSystem<int> sys;
  sys.labels = {0, 1};
  sys.bar[0] = {{0, 1}};
  sys.bar[1] = {{1, 1}, {0, v - Laurent::v(-1)}};
  const auto b = solve_canonical(sys, 1);
  CHECK(b.terms == std::map<int, Laurent>{{1, 1}, {0, v}});
  CHECK(solve_canonical(sys, 0).terms == std::map<int, Laurent>{{0, 1}});

  BarSystem<int> bad = sys;
  bad.bar[0] = {{0, 2}};
  CHECK_THROWS_AS(solve_canonical(bad, 1), AlgebraError);
  BarSystem<int> cyc;
  cyc.labels = {0, 1};
  cyc.bar[0] = {{0, 1}, {1, v}};
  cyc.bar[1] = {{1, 1}, {0, v}};
  CHECK_THROWS_AS(solve_canonical(cyc, 1), AlgebraError);
}

TEST_CASE("canonical basis of T_D") {
  for (const auto& lambda : dominant_symbols(2, 3)) {
    const CanonicalT b = canonical_tmodule(lambda);
    CHECK(b.terms.size() == 1);
  }
  const FlagSymbol p(2, {2, 1});
  const CanonicalT b = canonical_tmodule(p);
  CHECK(b.terms == std::map<FlagSymbol, Laurent>{{p, 1}, {FlagSymbol(2, {1, 2}), v}});
  for (const auto& q : flag_symbols_in_window(2, 2, -1, 4)) check_b(canonical_tmodule(q));
  for (const auto& q : flag_symbols_in_window(3, 2, 0, 4)) check_b(canonical_tmodule(q));
}

TEST_CASE("KL data") {
  const FlagSymbol p(2, {2, 1});
  const CanonicalT b = canonical_tmodule(p);
  const KlData lead = kl_coefficients(b, p);
  CHECK(lead.pairs == std::vector<std::pair<int, BigInt>>{{0, 1}});
  // c = v with x_p - x_q = 1 - 0: one pair, -i + 1 = 1.
  const KlData low = kl_coefficients(b, FlagSymbol(2, {1, 2}));
  CHECK(low.pairs == std::vector<std::pair<int, BigInt>>{{0, 1}});
  CHECK(low.consistent);
  for (const auto& e : canonical_table_t(2, 2, -1, 4))
    for (const auto& [q, c] : e.terms) CHECK(kl_coefficients(e, q).consistent);
}

TEST_CASE("canonical basis of S_D") {
  for (const auto& lambda : dominant_symbols(2, 2)) {
    const PeriodicMatrix d = diagonal_matrix(lambda);
    CHECK(canonical_schur(d).terms == std::map<PeriodicMatrix, Laurent>{{d, 1}});
  }
  const auto gens = generator_matrices(FlagSymbol(2, {1, 2}), 1);
  REQUIRE(gens);
  const CanonicalS b = canonical_schur(gens->first);
  CHECK(is_canonical(b));
  const SchurElement x = to_element(b);
  CHECK(tau_schur(x) == x);
  const auto table = canonical_table_s(2, 2, 2);
  CHECK(table.size() == 55);
  for (const auto& e : table) {
    CHECK(is_canonical(e));
    for (const auto& [q, c] : e.terms) {
      CHECK(kl_coefficients(e, q).consistent);
      for (const auto& [k, coef] : c.terms()) CHECK(coef > 0);
    }
  }
}

TEST_CASE("compatibility of the two bases") {
  for (const auto& b : canonical_table_s(2, 2, 2)) {
    const ModuleVector tv = schur_canonical_as_tvector(b);
    int ones = 0;
    for (const auto& [p, c] : tv.terms())
      if (c.is_one()) {
        ++ones;
        CHECK(to_vector(canonical_tmodule(p)) == tv);
      }
    CHECK(ones == 1);
  }
}

TEST_CASE("processing order and caps") {
  const FlagSymbol p(2, {3, 0});
  const CanonicalT b = canonical_tmodule(p);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) CHECK(canonical_tmodule(p, {10000, seed}) == b);
  CHECK_THROWS_AS(canonical_tmodule(p, {1, 1}), CapExceeded);
  CHECK(canonical_table_t(2, 2, -1, 4) == canonical_table_t_serial(2, 2, -1, 4));
  CHECK(canonical_table_s(2, 2, 1) == canonical_table_s_serial(2, 2, 1));
}
