#include "doctest.h"
#include "ua/algebra.hpp"
#include "ua/suite.hpp"

using namespace ua;

TEST_CASE("suite subsets and output") {
  SuiteOptions o;
  o.only = {"split-test", "nilpotent"};
  auto a = run_suite(o);
  REQUIRE(a.size() == 2);
  CHECK(a[0].id == "split-test");
  for (const auto& r : a) CHECK(r.holds);
  Json j = suite_to_json(a);
  CHECK(j["holds"] == true);
  CHECK(j.dump() == suite_to_json(run_suite(o)).dump());
  CHECK(j.dump().find("seconds") == std::string::npos);
  CHECK(suite_to_text(a).find("PASS") != std::string::npos);
  o.only = {"no-such-claim"};
  CHECK_THROWS_AS(run_suite(o), InputError);
  CHECK(suite_claim_ids().size() >= 12);
}
