#include <ditlogic/error.hpp>
#include <ditlogic/shannon.hpp>

#include <cmath>
#include <limits>

#include "doctest.h"

using namespace ditlogic;

namespace {

Partition P(std::vector<Block> blocks, std::size_t n) { return make_partition(blocks, n); }
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double tol = 1e-12;

}  // namespace

TEST_CASE("Shannon-Hartley entropy") {
  CHECK(shannon_hartley(1.0 / 32.0) == 5.0);
  CHECK(shannon_hartley(1.0) == 0.0);
  CHECK(shannon_hartley(1.0 / 3.0) == doctest::Approx(std::log2(3.0)).epsilon(tol));
  CHECK(shannon_hartley(0.5, Base::e) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(shannon_hartley(0.0), Error);
  CHECK_THROWS_AS(shannon_hartley(1.5), Error);
}

TEST_CASE("Shannon entropy of distributions") {
  CHECK(shannon_entropy(Distribution::uniform(8)) == doctest::Approx(3.0).epsilon(tol));
  CHECK(shannon_entropy(Distribution({1.0, 0.0, 0.0})) == 0.0);
  CHECK(shannon_entropy(Distribution({0.5, 0.25, 0.25})) == 1.5);
  CHECK(shannon_entropy(Distribution({0.5, 0.25, 0.25}), Base::e) ==
        doctest::Approx(1.5 * std::log(2.0)));
}

TEST_CASE("Shannon entropy of partitions") {
  CHECK(shannon_entropy(Partition::discrete(4)) == 2.0);
  CHECK(shannon_entropy(Partition::indiscrete(4)) == 0.0);
  CHECK(shannon_entropy(P({{0, 1}, {2}, {3}}, 4)) == 1.5);
  CHECK(shannon_entropy(P({{0, 1}, {2}}, 3)) == doctest::Approx(0.9182958340544893).epsilon(tol));
  const Distribution w({0.1, 0.4, 0.5});
  CHECK(shannon_entropy(P({{0, 1}, {2}}, 3), w) == doctest::Approx(1.0));
  CHECK_THROWS_AS(shannon_entropy(Partition::discrete(4), w), Error);
}

TEST_CASE("Shannon conditional entropy") {
  const JointDistribution uniform22({{0.25, 0.25}, {0.25, 0.25}});
  const JointDistribution coupled({{0.5, 0.0}, {0.0, 0.5}});
  const JointDistribution skew({{0.25, 0.25}, {0.5, 0.0}});
  CHECK(shannon_conditional(uniform22, Axis::y) == doctest::Approx(1.0).epsilon(tol));
  CHECK(shannon_conditional(coupled, Axis::y) == 0.0);
  CHECK(shannon_conditional(skew, Axis::y) == doctest::Approx(0.6887218755408672).epsilon(tol));
  CHECK(shannon_conditional(skew, Axis::y) ==
        doctest::Approx(joint_shannon_entropy(skew) - marginal_shannon_entropy(skew, Axis::y))
            .epsilon(tol));
  CHECK(shannon_conditional(skew, Axis::x) ==
        doctest::Approx(joint_shannon_entropy(skew) - marginal_shannon_entropy(skew, Axis::x))
            .epsilon(tol));

  const auto a = P({{0, 1}, {2, 3}}, 4);
  const auto b = P({{0, 2}, {1, 3}}, 4);
  CHECK(shannon_conditional(a, Partition::indiscrete(4)) == doctest::Approx(shannon_entropy(a)));
  CHECK(std::abs(shannon_conditional(a, a)) < tol);
  CHECK(shannon_conditional(a, b) == doctest::Approx(1.0).epsilon(tol));
  CHECK_THROWS_AS(shannon_conditional(a, Partition::discrete(3)), Error);
}

TEST_CASE("Shannon mutual information") {
  const JointDistribution uniform22({{0.25, 0.25}, {0.25, 0.25}});
  const JointDistribution coupled({{0.5, 0.0}, {0.0, 0.5}});
  const JointDistribution skew({{0.25, 0.25}, {0.5, 0.0}});
  CHECK(std::abs(shannon_mutual(uniform22)) < tol);
  CHECK(shannon_mutual(coupled) == doctest::Approx(1.0).epsilon(tol));
  CHECK(shannon_mutual(skew) == doctest::Approx(0.31127812445913294).epsilon(tol));

  const auto a = P({{0, 1}, {2, 3}}, 4);
  const auto b = P({{0, 2}, {1, 3}}, 4);
  CHECK(std::abs(shannon_mutual(a, Partition::indiscrete(4))) < tol);
  CHECK(std::abs(shannon_mutual(a, b)) < tol);
  CHECK(shannon_mutual(a, a) == doctest::Approx(shannon_entropy(a)));
}

TEST_CASE("cross entropy and KL divergence") {
  const Distribution p({0.5, 0.5});
  const Distribution q({0.25, 0.75});
  const Distribution e0({1.0, 0.0});
  const Distribution e1({0.0, 1.0});

  CHECK(cross_entropy(p, p) == doctest::Approx(shannon_entropy(p)));
  CHECK(cross_entropy(e0, e1) == inf);
  CHECK(cross_entropy(p, q) == doctest::Approx(1.207518749639422).epsilon(tol));

  CHECK(kl_divergence(q, q) == 0.0);
  CHECK(kl_divergence(p, q) == doctest::Approx(0.20751874963942196).epsilon(tol));
  CHECK(kl_divergence(q, p) == doctest::Approx(0.18872187554086717).epsilon(tol));
  CHECK(kl_divergence(e0, p) == doctest::Approx(1.0));
  CHECK(kl_divergence(p, e0) == inf);
  CHECK(symmetrized_kl_divergence(p, q) == doctest::Approx(0.1981203125901445).epsilon(tol));
  CHECK(symmetrized_kl_divergence(p, q) ==
        doctest::Approx(symmetrized_cross_entropy(p, q) -
                        (shannon_entropy(p) + shannon_entropy(q)) / 2.0)
            .epsilon(tol));
  CHECK_THROWS_AS(kl_divergence(p, Distribution::uniform(3)), Error);
}

TEST_CASE("dit-bit conversions") {
  CHECK(dit_to_bit(0.5) == 1.0);
  CHECK(dit_to_bit(0.0) == 0.0);
  CHECK(dit_to_bit(1.0 - 1.0 / 8.0) == 3.0);
  CHECK(bit_to_dit(1.0) == 0.5);
  CHECK(bit_to_dit(0.0) == 0.0);
  CHECK(bit_to_dit(std::log2(3.0)) == doctest::Approx(2.0 / 3.0).epsilon(tol));
  CHECK(bit_to_dit(dit_to_bit(0.3, Base::e), Base::e) == doctest::Approx(0.3));
  CHECK_THROWS_AS(dit_to_bit(1.0), Error);
  CHECK_THROWS_AS(dit_to_bit(-0.1), Error);
  CHECK_THROWS_AS(bit_to_dit(-1.0), Error);

  for (int m = 1; m <= 6; ++m) {
    const double p0 = std::ldexp(1.0, -m);
    CHECK(std::abs(dit_to_bit(1.0 - p0) - shannon_hartley(p0)) < tol);
    CHECK(std::abs(bit_to_dit(shannon_hartley(p0)) - (1.0 - p0)) < tol);
  }
}
