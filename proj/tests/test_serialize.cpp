#include "qschur/serialize.hpp"

#include <doctest.h>

#include <fstream>

using namespace qschur;

TEST_CASE("laurent json") {
  const Laurent x = Laurent::v(-1) + Laurent::v(1);
  CHECK(to_json(x) == Json::parse(R"({"-1":1,"1":1})"));
  const Laurent big = Laurent(BigInt(1) << 90) - Laurent::v(3);
  CHECK(laurent_from_json(Json::parse(to_json(big).dump())) == big);
  CHECK(to_json(big)["0"].is_string());
}

TEST_CASE("matrix text") {
  const PeriodicMatrix s(2, {{1, 1, 1}, {1, 2, 1}});
  CHECK(parse_matrix_text(s.to_text()) == s);
  CHECK(matrix_from_json(to_json(s)) == s);
  try {
    parse_matrix_text("n=2;{(1,1):1,(1,2)1}");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("csv quoting") {
  const auto rows = parse_csv("a,\"b,c\",\"say \"\"hi\"\"\"\r\nd,,e\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "say \"hi\""});
  CHECK(rows[1] == std::vector<std::string>{"d", "", "e"});
  const auto table = canonical_table_t(2, 2, 0, 3);
  const auto back = parse_csv(canonical_csv(table));
  CHECK(back[0] == std::vector<std::string>{"leading", "term", "coefficient", "kl_pairs"});
}

TEST_CASE("canonical json and cache") {
  const CanonicalT b = canonical_tmodule(FlagSymbol(2, {2, 1}));
  const Json j = to_json(b);
  CHECK(j["kind"] == "T");
  CHECK(canonical_t_from_json(j) == b);
  const auto dir = std::filesystem::temp_directory_path() / "qschur_cache_test";
  std::filesystem::remove_all(dir);
  CanonicalDiskCache cache(dir);
  CHECK_FALSE(cache.find(b.leading));
  cache.store(b);
  REQUIRE(cache.find(b.leading));
  CHECK(*cache.find(b.leading) == b);
  CHECK(cache.file_for(b.leading).filename() == "t_n2_D2_l1-2.json");
  const CanonicalS s = canonical_schur(PeriodicMatrix(2, {{1, 2, 1}, {2, 2, 1}}));
  cache.store(s);
  CHECK(*cache.find(s.leading) == s);
  std::filesystem::remove_all(dir);
}

TEST_CASE("crystal graph encodings") {
  const CrystalGraph g = crystal_graph(2, 1, 0, 3);
  CHECK(crystal_graph_from_json(to_json(g)) == g);
  const std::string dot = to_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("dashed") != std::string::npos);
}
