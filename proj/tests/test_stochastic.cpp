#include <ditlogic/error.hpp>
#include <ditlogic/logical.hpp>
#include <ditlogic/shannon.hpp>
#include <ditlogic/stochastic.hpp>

#include <cmath>
#include <vector>

#include "doctest.h"

using namespace ditlogic;

TEST_CASE("generator is deterministic and in range") {
  Xoshiro256StarStar a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs |= (x != c());
  }
  CHECK(differs);

  Xoshiro256StarStar r(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform_open_closed();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
  }
}

TEST_CASE("categorical sampler never draws zero-probability outcomes") {
  const Distribution p({0.0, 0.5, 0.0, 0.5, 0.0});
  const CategoricalSampler sample(p);
  Xoshiro256StarStar rng(1);
  std::vector<int> counts(5, 0);
  for (int i = 0; i < 20000; ++i) ++counts[sample(rng)];
  CHECK(counts[0] == 0);
  CHECK(counts[2] == 0);
  CHECK(counts[4] == 0);
  CHECK(std::abs(counts[1] / 20000.0 - 0.5) < 0.02);
}

TEST_CASE("pair distinction rate converges to logical entropy") {
  const Distribution p({0.5, 1.0 / 3.0, 1.0 / 6.0});
  const auto r = pair_distinction_rate(p, 200000, 2024);
  CHECK(r.trials == 200000);
  CHECK(r.seed == 2024);
  CHECK(std::abs(r.estimate - 11.0 / 18.0) < 5.0 * r.std_error);
  CHECK(r.std_error == doctest::Approx(std::sqrt((11.0 / 18.0) * (7.0 / 18.0) / 200000.0))
                           .epsilon(0.01));

  const auto again = pair_distinction_rate(p, 200000, 2024);
  CHECK(again.estimate == r.estimate);

  CHECK(pair_distinction_rate(Distribution::point_mass(3, 1), 1000, 5).estimate == 0.0);
  CHECK_THROWS_AS(pair_distinction_rate(p, 0, 1), Error);
}

TEST_CASE("average difference rate converges to logical entropy") {
  const Distribution p({0.5, 0.25, 0.25});
  const auto r = average_difference_rate(p, 100000, 9);
  CHECK(std::abs(r.estimate - logical_entropy(p)) < 5.0 * r.std_error);
  CHECK(average_difference_rate(Distribution::uniform(4), 1000, 3).estimate ==
        doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("typical message statistics") {
  const auto u3 = typical_message_stats(Distribution::uniform(3), 1000, 10, 1);
  CHECK(u3.estimate == std::log2(3.0));
  CHECK(u3.std_error == 0.0);

  const Distribution p({0.5, 0.25, 0.25});
  const auto r = typical_message_stats(p, 10000, 100, 77);
  CHECK(std::abs(r.estimate - 1.5) < 0.02);
  CHECK(r.std_error == doctest::Approx(0.0005).epsilon(0.2));

  CHECK(typical_count_log(p, 10) == doctest::Approx(15.0));
  CHECK(typical_count_log(p, 10) == doctest::Approx(10 * shannon_entropy(p)));
  CHECK_THROWS_AS(typical_message_stats(p, 0, 10, 1), Error);
  CHECK_THROWS_AS(typical_message_stats(p, 10, 0, 1), Error);
}
