#include <ditlogic/error.hpp>
#include <ditlogic/stirling.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

using namespace ditlogic;

TEST_CASE("log factorial against lgamma") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
  for (std::uint64_t n : {10u, 100u, 1000u, 10000u}) {
    const double oracle = std::lgamma(static_cast<double>(n) + 1.0);
    CHECK(std::abs(log_factorial(n) - oracle) <= 1e-12 * oracle);
  }
  CHECK_THROWS_AS(log_factorial(max_log_factorial_argument + 1), Error);
}

TEST_CASE("stirling entropy examples") {
  const std::vector<std::uint64_t> six_six{6, 6};
  const auto r = stirling_entropy(six_six);
  CHECK(std::abs(r.exact - std::log(924.0) / 12.0) < 1e-12);
  CHECK(r.approx2 == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(r.error3 < r.error2);

  const std::vector<std::uint64_t> single{1};
  const auto one = stirling_entropy(single);
  CHECK(one.exact == 0.0);
  CHECK(one.approx2 == 0.0);
  CHECK(std::abs(one.approx3) < 1e-15);

  const std::vector<std::uint64_t> quarter(4, 250);
  const auto big = stirling_entropy(quarter);
  CHECK(big.error3 < big.error2);
  CHECK(big.error2 == doctest::Approx(0.01034710979513953).epsilon(1e-6));
}

TEST_CASE("three-term approximation wins and both errors shrink with N") {
  for (std::size_t blocks = 2; blocks <= 10; ++blocks) {
    double previous2 = INFINITY;
    double previous3 = INFINITY;
    for (std::uint64_t n : {100u, 1000u, 10000u}) {
      std::vector<std::uint64_t> sizes(blocks, n / blocks);
      sizes[0] += n - (n / blocks) * blocks;
      const auto r = stirling_entropy(sizes);
      CHECK(r.error3 < r.error2);
      CHECK(r.error2 < previous2);
      CHECK(r.error3 < previous3);
      previous2 = r.error2;
      previous3 = r.error3;
    }
  }
}

TEST_CASE("stirling input errors") {
  CHECK_THROWS_AS(stirling_entropy(std::vector<std::uint64_t>{}), Error);
  CHECK_THROWS_AS(stirling_entropy(std::vector<std::uint64_t>{3, 0}), Error);
}
