#pragma once

#include <ditlogic/shannon.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "report.hpp"

namespace ditlogic::cli {

struct Options {
  std::optional<Base> base;  ///< unset means the command's default unit
  bool exact = false;
  std::optional<std::string> weights;
  std::optional<std::size_t> size;
  std::uint64_t seed = 1;
};

enum class EntropyInput { automatic, partition, distribution };

/// `-` reads stdin; an existing file path reads the file; anything else is
/// taken as inline text.
std::string read_input(const std::string& arg);

Report cmd_entropy(const std::string& input, EntropyInput kind, const Options& opt);
Report cmd_joint(const std::string& input, const Options& opt);
Report cmd_ops(const std::string& op, const std::string& a, const std::string& b,
               const Options& opt);
Report cmd_compare(const std::string& p, const std::string& q, const Options& opt);
Report cmd_verify(std::size_t max_n, const Options& opt);
Report cmd_lattice(std::size_t n, bool dot, const Options& opt);

struct SampleParams {
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> length;
  std::uint64_t samples = 100;
};
Report cmd_sample(const std::string& kind, const std::string& p, const SampleParams& params,
                  const Options& opt);
Report cmd_stirling(const std::string& sizes, const Options& opt);

}  // namespace ditlogic::cli
