#include "ditlogic/shannon.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ditlogic/error.hpp"
#include "ditlogic/logical.hpp"

namespace ditlogic {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

double log_in(double x, Base base) { return base == Base::two ? std::log2(x) : std::log(x); }

void check_lengths(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::size_mismatch, "distributions of lengths " + std::to_string(p.size()) +
                                              " and " + std::to_string(q.size()));
  }
}

// p_{B cap C} over blocks B of pi (rows) and C of sigma (columns).
JointDistribution block_joint(const Partition& pi, const Partition& sigma,
                              const Distribution& weights) {
  if (pi.universe() != sigma.universe()) {
    throw Error(ErrorKind::universe_mismatch, "partitions on universes of size " +
                                                  std::to_string(pi.size()) + " and " +
                                                  std::to_string(sigma.size()));
  }
  if (weights.size() != pi.size()) {
    throw Error(ErrorKind::size_mismatch, "weights have " + std::to_string(weights.size()) +
                                              " entries for a universe of " +
                                              std::to_string(pi.size()));
  }
  std::vector<std::vector<double>> cells(pi.block_count(),
                                         std::vector<double>(sigma.block_count(), 0.0));
  for (std::size_t u = 0; u < pi.size(); ++u) {
    cells[pi.block_of(u)][sigma.block_of(u)] += weights[u];
  }
  return JointDistribution(cells);
}

double entropy_of(std::span<const double> probs, Base base) {
  double total = 0.0;
  for (double p : probs) {
    if (p > 0.0) total += p * log_inverse(p, base);
  }
  return total;
}

}  // namespace

const char* unit_name(Base base) noexcept { return base == Base::two ? "bits" : "nats"; }

double log_inverse(double p, Base base) {
  if (p == 0.0) return infinity;
  return 0.0 - log_in(p, base);  // +0 rather than -0 at p = 1
}

double shannon_hartley(double p0, Base base) {
  if (!(p0 > 0.0 && p0 <= 1.0)) {
    throw Error(ErrorKind::domain, "Shannon-Hartley entropy needs 0 < p0 <= 1");
  }
  return log_inverse(p0, base);
}

double shannon_entropy(const Distribution& p, Base base) { return entropy_of(p.probs(), base); }

double shannon_entropy(const Partition& pi, Base base) {
  return shannon_entropy(block_distribution<double>(pi), base);
}

double shannon_entropy(const Partition& pi, const Distribution& weights, Base base) {
  return shannon_entropy(block_distribution(pi, weights), base);
}

double joint_shannon_entropy(const JointDistribution& j, Base base) {
  return entropy_of(j.cells(), base);
}

double marginal_shannon_entropy(const JointDistribution& j, Axis axis, Base base) {
  return entropy_of(j.marginal(axis), base);
}

double shannon_conditional(const JointDistribution& j, Axis given, Base base) {
  double total = 0.0;
  for (std::size_t x = 0; x < j.rows(); ++x) {
    for (std::size_t y = 0; y < j.cols(); ++y) {
      const double c = j(x, y);
      if (c == 0.0) continue;
      const double cond = given == Axis::y ? j.marginal_y()[y] : j.marginal_x()[x];
      total += c * log_in(cond / c, base);
    }
  }
  return total;
}

double shannon_conditional(const Partition& pi, const Partition& sigma, Base base) {
  return shannon_conditional(pi, sigma, Distribution::uniform(pi.size()), base);
}

double shannon_conditional(const Partition& pi, const Partition& sigma, const Distribution& weights,
                           Base base) {
  return shannon_conditional(block_joint(pi, sigma, weights), Axis::y, base);
}

double shannon_mutual(const JointDistribution& j, Base base) {
  double total = 0.0;
  for (std::size_t x = 0; x < j.rows(); ++x) {
    for (std::size_t y = 0; y < j.cols(); ++y) {
      const double c = j(x, y);
      if (c == 0.0) continue;
      total += c * log_in(c / (j.marginal_x()[x] * j.marginal_y()[y]), base);
    }
  }
  return total;
}

double shannon_mutual(const Partition& pi, const Partition& sigma, Base base) {
  return shannon_mutual(pi, sigma, Distribution::uniform(pi.size()), base);
}

double shannon_mutual(const Partition& pi, const Partition& sigma, const Distribution& weights,
                      Base base) {
  return shannon_mutual(block_joint(pi, sigma, weights), base);
}

double cross_entropy(const Distribution& p, const Distribution& q, Base base) {
  check_lengths(p, q);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return infinity;
    total += p[i] * log_inverse(q[i], base);
  }
  return total;
}

double symmetrized_cross_entropy(const Distribution& p, const Distribution& q, Base base) {
  return 0.5 * (cross_entropy(p, q, base) + cross_entropy(q, p, base));
}

double kl_divergence(const Distribution& p, const Distribution& q, Base base) {
  check_lengths(p, q);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return infinity;
    total += p[i] * log_in(p[i] / q[i], base);
  }
  return total;
}

double symmetrized_kl_divergence(const Distribution& p, const Distribution& q, Base base) {
  return 0.5 * (kl_divergence(p, q, base) + kl_divergence(q, p, base));
}

double dit_to_bit(double h0, Base base) {
  if (!(h0 >= 0.0 && h0 < 1.0)) throw Error(ErrorKind::domain, "dit count must lie in [0, 1)");
  return log_inverse(1.0 - h0, base);
}

double bit_to_dit(double big_h0, Base base) {
  if (!(big_h0 >= 0.0)) throw Error(ErrorKind::domain, "bit count must be non-negative");
  return base == Base::two ? 1.0 - std::exp2(-big_h0) : 1.0 - std::exp(-big_h0);
}

}  // namespace ditlogic
