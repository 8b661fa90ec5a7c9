#include "ditlogic/stochastic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "ditlogic/error.hpp"
#include "ditlogic/shannon.hpp"

namespace ditlogic {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Welford running mean and variance; a constant stream keeps its mean exact.
class RunningStats {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  SampleReport report(std::uint64_t seed) const {
    SampleReport r;
    r.estimate = mean_;
    r.trials = count_;
    r.seed = seed;
    if (count_ > 1) {
      const double variance = std::max(0.0, m2_ / static_cast<double>(count_ - 1));
      r.std_error = std::sqrt(variance / static_cast<double>(count_));
    }
    return r;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw Error(ErrorKind::domain, std::string(what) + " must be at least 1");
}

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Xoshiro256StarStar::operator()() noexcept {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Xoshiro256StarStar::uniform_open_closed() noexcept {
  return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
}

CategoricalSampler::CategoricalSampler(const Distribution& p) : cdf_(p.size()) {
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    running += p[i];
    cdf_[i] = running;
    if (p[i] > 0.0) last_positive = i;
  }
  std::fill(cdf_.begin() + static_cast<std::ptrdiff_t>(last_positive), cdf_.end(), 1.0);
}

std::size_t CategoricalSampler::operator()(Xoshiro256StarStar& rng) const {
  const double u = rng.uniform_open_closed();
  return static_cast<std::size_t>(std::lower_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
}

SampleReport pair_distinction_rate(const Distribution& p, std::uint64_t trials,
                                   std::uint64_t seed) {
  require_positive(trials, "trials");
  Xoshiro256StarStar rng(seed);
  const CategoricalSampler draw(p);
  RunningStats stats;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto a = draw(rng);
    const auto b = draw(rng);
    stats.add(a != b ? 1.0 : 0.0);
  }
  return stats.report(seed);
}

SampleReport average_difference_rate(const Distribution& p, std::uint64_t sequence_length,
                                     std::uint64_t seed) {
  require_positive(sequence_length, "sequence length");
  Xoshiro256StarStar rng(seed);
  const CategoricalSampler draw(p);
  RunningStats stats;
  for (std::uint64_t j = 0; j < sequence_length; ++j) stats.add(1.0 - p[draw(rng)]);
  return stats.report(seed);
}

SampleReport typical_message_stats(const Distribution& p, std::uint64_t message_length,
                                   std::uint64_t samples, std::uint64_t seed) {
  require_positive(message_length, "message length");
  require_positive(samples, "samples");
  Xoshiro256StarStar rng(seed);
  const CategoricalSampler draw(p);

  // Letters pooled by probability value: -(1/N) log2 P = sum over values v of
  // (count_v / N) log2(1/v).
  std::map<double, std::size_t> group_of;
  std::vector<std::size_t> letter_group(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    letter_group[i] = group_of.try_emplace(p[i], group_of.size()).first->second;
  }
  std::vector<double> group_bits(group_of.size());
  for (const auto& [value, g] : group_of) group_bits[g] = log_inverse(value, Base::two);
  // A single pool is a uniform source on its support; use log2 of the support
  // size so the result does not carry the rounding of 1/k.
  if (group_of.size() == 1) {
    const auto support = std::count_if(p.probs().begin(), p.probs().end(),
                                       [](double x) { return x > 0.0; });
    group_bits[0] = std::log2(static_cast<double>(support));
  }

  const double n = static_cast<double>(message_length);
  RunningStats stats;
  std::vector<std::uint64_t> counts(group_bits.size());
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t j = 0; j < message_length; ++j) ++counts[letter_group[draw(rng)]];
    double per_letter = 0.0;
    for (std::size_t g = 0; g < counts.size(); ++g) {
      if (counts[g] != 0) per_letter += static_cast<double>(counts[g]) / n * group_bits[g];
    }
    stats.add(per_letter);
  }
  return stats.report(seed);
}

double typical_count_log(const Distribution& p, std::uint64_t message_length) {
  require_positive(message_length, "message length");
  return static_cast<double>(message_length) * shannon_entropy(p, Base::two);
}

}  // namespace ditlogic
