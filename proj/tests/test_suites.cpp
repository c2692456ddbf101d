#include "qschur/suites.hpp"

#include <doctest.h>

using namespace qschur;

namespace {
SuiteConfig small(int n, int d) {
  SuiteConfig c;
  c.n = n;
  c.rank = d;
  c.random_monomials = 20;
  return c;
}
} // namespace

TEST_CASE("every suite passes at small sizes") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteReport r = run_suite(name, small(2, 1));
    CHECK(r.passed());
    CHECK(r.count("pass") > 0);
    CHECK(r.count("fail") == 0);
  }
}

TEST_CASE("report json layout") {
  const Json j = hecke_suite(small(2, 1)).to_json();
  CHECK(j.at("suite") == "hecke");
  CHECK(j.contains("config"));
  CHECK(j.contains("summary"));
  REQUIRE(j.at("cases").is_array());
  for (const auto& c : j.at("cases")) {
    CHECK(c.contains("id"));
    CHECK(c.contains("status"));
    CHECK(c.contains("detail"));
  }
}

TEST_CASE("cases sorted and identical to the serial runner") {
  std::vector<CaseFn> groups;
  for (int g = 0; g < 16; ++g)
    groups.push_back([g] {
      std::vector<CaseResult> out;
      for (int k = 0; k < 3; ++k) out.push_back({"g" + std::to_string(100 + g) + "/" + std::to_string(k), "pass", ""});
      return out;
    });
  const auto par = run_cases(groups, 4);
  const auto ser = run_cases_serial(groups);
  REQUIRE(par.size() == 48);
  REQUIRE(ser.size() == 48);
  for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i].id == ser[i].id);
  CHECK(std::is_sorted(par.begin(), par.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("exceptions in a group become error cases") {
  std::vector<CaseFn> groups{[]() -> std::vector<CaseResult> { throw AlgebraError("boom"); }};
  const auto r = run_cases(groups, 1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == "fail");
  CHECK(r[0].id.rfind("error/", 0) == 0);
}

TEST_CASE("commutator scalar forms") {
  // mu = (3, 1): next difference [2], previous difference (index 0 -> 2) [-2].
  CHECK(commutator_scalar({3, 1}, 1) == quantum_integer(2));
  CHECK(commutator_scalar({3, 1}, 1, CommutatorForm::previous_difference) == quantum_integer(2));
  CHECK(commutator_scalar({3, 1, 0}, 1) == quantum_integer(2));
  CHECK(commutator_scalar({3, 1, 0}, 1, CommutatorForm::previous_difference) == quantum_integer(3));
  CHECK(commutator_scalar({3, 1, 0}, 3) == -quantum_integer(3));
  CHECK(commutator_form_from_string("previous-difference") == CommutatorForm::previous_difference);
  CHECK(!commutator_form_from_string("bogus"));
}

TEST_CASE("the previous-difference form is reported failing at n = 3") {
  SuiteConfig c = small(3, 2);
  c.commutator = CommutatorForm::previous_difference;
  CHECK(!relations_suite(c).passed());
}
