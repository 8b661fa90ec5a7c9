#include <ditlogic/error.hpp>
#include <ditlogic/verify.hpp>

#include "doctest.h"

using namespace ditlogic;

TEST_CASE("verification suites pass for small universes") {
  const auto report = run_verification(4, 1);
  CHECK(report.passed());
  CHECK(report.pairs_checked_at_max_n == 15u * 15u);
  CHECK(report.pairs_checked_total == 1u + 4u + 25u + 225u);
  for (const auto& suite : report.suites) {
    INFO(suite.name);
    CHECK(suite.checks > 0);
    CHECK(suite.passed());
    CHECK(suite.worst_residual < 1e-12);
  }
}

TEST_CASE("verification limits") {
  CHECK_THROWS_AS(run_verification(1, 1), Error);
  CHECK_THROWS_AS(run_verification(7, 1), Error);
}
