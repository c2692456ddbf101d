#include "qschur/crystal.hpp"

#include <doctest.h>

#include <set>

using namespace qschur;

namespace {

FlagSymbol F(int n, std::vector<int> w) { return FlagSymbol(n, std::move(w)); }

} // namespace

TEST_CASE("bracketing") {
  const BracketingPartition none = bracket(F(3, {3}), 1);
  CHECK(none.J.empty());
  CHECK(none.pairs.empty());
  const BracketingPartition b = bracket(F(2, {1, 2}), 1);
  CHECK(b.J.empty());
  REQUIRE(b.pairs.size() == 1);
  CHECK(b.pairs[0] == std::pair<int, int>{1, 2});
  CHECK_THROWS(bracket(F(1, {1, 1}), 0));
}

TEST_CASE("crystal operators") {
  CHECK(kashiwara_f(F(2, {1, 1}), 1) == F(2, {2, 1}));
  CHECK_FALSE(kashiwara_e(F(2, {1, 1}), 1));
  CHECK(kashiwara_oracle(F(2, {1, 1}), 1, Chevalley::f) == F(2, {2, 1}));
  CHECK_FALSE(kashiwara_oracle(F(2, {1, 1}), 1, Chevalley::e));
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& p : flag_symbols_in_window(n, d, 0, n + 1))
        for (int i = 0; i < n; ++i) {
          CHECK(kashiwara_f(p, i) == kashiwara_oracle(p, i, Chevalley::f));
          CHECK(kashiwara_e(p, i) == kashiwara_oracle(p, i, Chevalley::e));
          if (const auto q = kashiwara_f(p, i)) CHECK(kashiwara_e(*q, i) == p);
          // Highest weight of the string: f~ applies exactly phi times.
          FlagSymbol top = p;
          while (const auto u = kashiwara_e(top, i)) top = *u;
          CHECK(crystal_epsilon(top, i) == 0);
          int steps = 0;
          for (auto q = std::optional<FlagSymbol>(top); q; q = kashiwara_f(*q, i)) ++steps;
          CHECK(steps == crystal_phi(top, i) + 1);
        }
}

TEST_CASE("chains") {
  for (const auto& p : flag_symbols_in_window(2, 3, 0, 3)) {
    const auto chain = crystal_chain(p, 1);
    std::set<FlagSymbol> distinct(chain.begin(), chain.end());
    CHECK(distinct.size() == chain.size());
    for (std::size_t l = 0; l + 1 < chain.size(); ++l) CHECK(kashiwara_f(chain[l], 1) == chain[l + 1]);
  }
}

TEST_CASE("crystal graph") {
  const CrystalGraph g = crystal_graph(2, 1, 0, 3);
  CHECK(g.vertices.size() == 4);
  int defined = 0;
  for (const auto& p : g.vertices)
    for (int i = 0; i < 2; ++i) defined += kashiwara_f(p, i).has_value();
  CHECK(static_cast<int>(g.edges.size()) == defined);
  for (const auto& e : g.edges) {
    CHECK(kashiwara_e(e.to, e.residue) == e.from);
    CHECK(e.leaves_window == (e.to(1) < 0 || e.to(1) > 3));
  }
  CHECK(g == crystal_graph_serial(2, 1, 0, 3));
  const CrystalGraph h = crystal_graph(2, 2, 0, 3);
  CHECK(h == crystal_graph_serial(2, 2, 0, 3));
}
