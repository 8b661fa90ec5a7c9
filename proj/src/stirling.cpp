#include "ditlogic/stirling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ditlogic/error.hpp"

namespace ditlogic {

double log_factorial(std::uint64_t n) {
  if (n > max_log_factorial_argument) {
    throw Error(ErrorKind::limit_exceeded,
                "log-factorial argument " + std::to_string(n) + " exceeds " +
                    std::to_string(max_log_factorial_argument));
  }
  // Neumaier summation.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t k = 2; k <= n; ++k) {
    const double term = std::log(static_cast<double>(k));
    const double t = sum + term;
    carry += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

StirlingReport stirling_entropy(std::span<const std::uint64_t> block_sizes) {
  if (block_sizes.empty()) throw Error(ErrorKind::empty_input, "no block sizes given");
  std::uint64_t total = 0;
  for (auto k : block_sizes) {
    if (k == 0) throw Error(ErrorKind::domain, "block sizes must be positive");
    total += k;
  }
  const double n = static_cast<double>(total);
  constexpr double two_pi = 2.0 * std::numbers::pi;

  double log_w = log_factorial(total);
  double shannon = 0.0;
  // Three-term Stirling applied to N! and to each N_i!: the
  // (1/2) ln(2 pi k) terms survive the cancellation.
  double correction = std::log(two_pi * n);
  for (auto k : block_sizes) {
    log_w -= log_factorial(k);
    const double p = static_cast<double>(k) / n;
    shannon -= p * std::log(p);
    correction -= std::log(two_pi * static_cast<double>(k));
  }

  StirlingReport r{};
  r.exact = log_w / n;
  r.approx2 = shannon;
  r.approx3 = shannon + correction / (2.0 * n);
  r.error2 = std::abs(r.exact - r.approx2);
  r.error3 = std::abs(r.exact - r.approx3);
  return r;
}

}  // namespace ditlogic
