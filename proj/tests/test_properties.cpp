#include <random>

#include "doctest.h"
#include "suites.hpp"
#include "support.hpp"

using namespace arq;

namespace {

void run_fixture(const std::string& name) {
  suites::Options opt;
  suites::Report r = suites::run_all(io::load_spec(test::source_path("fixtures/" + name + ".json")), opt);
  std::size_t passed = 0;
  for (auto& c : r.checks) {
    if (c.status == suites::Status::Fail) FAIL_CHECK(suites::format(c, false));
    passed += c.status == suites::Status::Pass;
  }
  CHECK(r.ok());
  CHECK(passed > 30);
}

}  // namespace

TEST_CASE("property suites: a3") { run_fixture("a3"); }
TEST_CASE("property suites: a3rel") { run_fixture("a3rel"); }
TEST_CASE("property suites: dualnumbers") { run_fixture("dualnumbers"); }
TEST_CASE("property suites: nakayama-x3") { run_fixture("nakayama-x3"); }
TEST_CASE("property suites: t2dualnumbers") { run_fixture("t2dualnumbers"); }

TEST_CASE("property suites report falsified checks") {
  suites::Report r;
  r.run("s", "passes", [] { return std::string(); });
  r.run("s", "fails", [] { return std::string("bad"); });
  r.run("s", "skips", []() -> std::string { fail(ErrorKind::Budget, "cap"); });
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[0].status == suites::Status::Pass);
  CHECK(r.checks[1].status == suites::Status::Fail);
  CHECK(r.checks[2].status == suites::Status::Skip);
  CHECK(r.failures() == 1);
}

TEST_CASE("random modules recompose after decomposition") {
  // seeded random direct sums of universe members
  AlgPtr lam = test::fixture("nakayama-x3");
  IndecUniverse u = all_indecomposables(lam);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FDModule> parts;
    std::vector<std::size_t> want(u.size(), 0);
    for (int k = 0; k < 3; ++k) {
      std::size_t i = rng() % u.size();
      parts.push_back(u.modules[i]);
      ++want[i];
    }
    FDModule sum = direct_sum_module(parts);
    CHECK(multiplicities(sum, u.modules) == want);
    std::vector<FDModule> pieces;
    for (auto& s : decompose(sum)) pieces.push_back(s.mod);
    CHECK(is_isomorphic(direct_sum_module(pieces), sum));
  }
}
