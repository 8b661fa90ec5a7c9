#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ditlogic {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double worst_residual = 0.0;  ///< 0 for exact set/rational suites that pass
  bool passed() const noexcept { return failures == 0; }
};

struct VerificationReport {
  std::vector<SuiteResult> suites;
  std::uint64_t pairs_checked_at_max_n = 0;
  std::uint64_t pairs_checked_total = 0;
  bool passed() const noexcept;
};

inline constexpr std::size_t max_verification_n = 6;

/// Runs the exhaustive partition suites for every n in [1, max_n] and the
/// randomized distribution and joint suites seeded by `seed`. Throws
/// Error{limit_exceeded} unless 2 <= max_n <= 6.
VerificationReport run_verification(std::size_t max_n, std::uint64_t seed);

}  // namespace ditlogic
