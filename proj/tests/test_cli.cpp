#include "qschur/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>

using namespace qschur;

TEST_CASE("xstat and ystat print a single integer") {
  RunConfig c;
  c.flag = "n=2;D=2;[2,1]";
  const auto r = compute_command("xstat", c);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n");
  c.flag = "n=2;D=2;[1,2]";
  CHECK(compute_command("xstat", c).output == "0\n");
}

TEST_CASE("canonical-t json and csv") {
  RunConfig c;
  c.flag = "n=2;D=2;[2,1]";
  const auto r = compute_command("canonical-t", c);
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.output);
  CHECK(j.at("kind") == "T");
  c.format = "csv";
  const auto csv = compute_command("canonical-t", c);
  REQUIRE(csv.exit_code == 0);
  CHECK(parse_csv(csv.output).at(0).at(0) == "leading");
}

TEST_CASE("crystal graph as dot") {
  RunConfig c;
  c.n = 2;
  c.rank = 1;
  c.window = 4;
  c.format = "dot";
  const auto r = compute_command("crystal-graph", c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("digraph", 0) == 0);
  c.n = 1;
  CHECK(compute_command("crystal-graph", c).exit_code == 2);
}

TEST_CASE("warm cache output is byte-identical") {
  const auto dir = std::filesystem::temp_directory_path() / "qschur_test_cli_cache";
  std::filesystem::remove_all(dir);
  RunConfig c;
  c.cache_dir = dir;
  c.matrix = "n=2;{(1,1):1,(1,2):1,(2,2):1,(2,3):1}";
  clear_canonical_caches();
  const auto cold = compute_command("canonical-s", c);
  REQUIRE(cold.exit_code == 0);
  CHECK(!std::filesystem::is_empty(dir));
  clear_canonical_caches();
  const auto warm = compute_command("canonical-s", c);
  CHECK(warm.output == cold.output);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache dir from the environment") {
  CHECK(resolve_cache_dir(std::filesystem::path("/x")) == std::filesystem::path("/x"));
  setenv("QSCHUR_CACHE", "/tmp/qschur_env_cache", 1);
  CHECK(resolve_cache_dir(std::nullopt) == std::filesystem::path("/tmp/qschur_env_cache"));
  unsetenv("QSCHUR_CACHE");
  CHECK(!resolve_cache_dir(std::nullopt));
}

TEST_CASE("bad input exits with 2") {
  RunConfig c;
  c.flag = "n=2;D=2;[2,";
  CHECK(compute_command("xstat", c).exit_code == 2);
  c.flag = "n=2;D=2;[2,1]";
  CHECK(compute_command("nonsense", c).exit_code == 2);
  CHECK(suite_command("nonsense", c).exit_code == 2);
  c.flag.clear();
  CHECK(compute_command("xstat", c).exit_code == 2);
}

TEST_CASE("suite command") {
  RunConfig c;
  c.n = 2;
  c.rank = 1;
  const auto ok = suite_command("hecke", c);
  CHECK(ok.exit_code == 0);
  CHECK(Json::parse(ok.output).at("suite") == "hecke");
  c.n = 3;
  c.commutator = CommutatorForm::previous_difference;
  CHECK(suite_command("relations", c).exit_code == 1);
}
