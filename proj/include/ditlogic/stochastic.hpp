#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ditlogic/distribution.hpp"

namespace ditlogic {

/// xoshiro256** (Blackman and Vigna), state seeded by four splitmix64
/// outputs of the 64-bit seed. The stream is fully determined by the seed,
/// so any port implementing the same two generators reproduces every report.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed);

  std::uint64_t operator()() noexcept;

  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

  /// (top 53 bits + 1) * 2^-53, a uniform value in (0, 1].
  double uniform_open_closed() noexcept;

 private:
  std::uint64_t s_[4];
};

/// Inverse-CDF sampling over right-closed intervals: outcome i is drawn when
/// u falls in (c_{i-1}, c_i] with u in (0, 1] and c the cumulative sums
/// (last entry forced to 1). Zero-probability outcomes are never drawn.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(const Distribution& p);

  std::size_t operator()(Xoshiro256StarStar& rng) const;

 private:
  std::vector<double> cdf_;
};

struct SampleReport {
  double estimate = 0.0;
  std::uint64_t trials = 0;
  double std_error = 0.0;  ///< sample standard deviation / sqrt(trials)
  std::uint64_t seed = 0;
};

/// Fraction of independent draw pairs that differ; estimates h(p).
SampleReport pair_distinction_rate(const Distribution& p, std::uint64_t trials,
                                   std::uint64_t seed);

/// One sequence u_1..u_N; returns the mean of 1 - Pr(u_j). Tends to h(p).
SampleReport average_difference_rate(const Distribution& p, std::uint64_t sequence_length,
                                     std::uint64_t seed);

/// Mean over sampled messages of length N of -(1/N) log2 Pr(message).
/// Tends to H(p). Letters of equal probability are pooled before the log is
/// weighted, so an equiprobable source yields log2(n) exactly.
SampleReport typical_message_stats(const Distribution& p, std::uint64_t message_length,
                                   std::uint64_t samples, std::uint64_t seed);

/// log2 of the number of typical messages, N H(p).
double typical_count_log(const Distribution& p, std::uint64_t message_length);

}  // namespace ditlogic
