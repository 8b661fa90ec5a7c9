#pragma once

#include <cstdint>
#include <span>

namespace ditlogic {

inline constexpr std::uint64_t max_log_factorial_argument = 1'000'000;

/// ln(n!) by compensated summation of ln k, k = 2..n. Throws
/// Error{limit_exceeded} above max_log_factorial_argument.
double log_factorial(std::uint64_t n);

/// All values in nats.
struct StirlingReport {
  double exact;    ///< (1/N) ln(N! / (N_1! ... N_n!))
  double approx2;  ///< H_e(p), p_i = N_i / N: two-term Stirling
  double approx3;  ///< H_e(p) plus the (1/2) ln(2 pi k) terms of three-term Stirling
  double error2;   ///< |exact - approx2|
  double error3;   ///< |exact - approx3|
};

/// Throws Error{empty_input} for no blocks and Error{domain} for a zero size.
StirlingReport stirling_entropy(std::span<const std::uint64_t> block_sizes);

}  // namespace ditlogic
