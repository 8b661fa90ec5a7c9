#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ditlogic/partition.hpp"
#include "ditlogic/rational.hpp"

// Text formats:
//   partition     0,1|2|3,4        blocks split by '|', elements by ','
//   distribution  1/2,0.25,1/4     decimals or fractions, comma separated
//   matrix        CSV rows; inline text may also separate rows with ';'

namespace ditlogic {

/// Universe size is max index + 1 unless `size` is given.
Partition parse_partition(std::string_view text, std::optional<std::size_t> size = std::nullopt);
std::string format_partition(const Partition& pi);

struct ParsedNumbers {
  std::vector<Rational> values;
  bool has_fraction = false;  ///< some entry was written as a/b
};

ParsedNumbers parse_number_list(std::string_view text);

struct ParsedMatrix {
  std::vector<std::vector<Rational>> rows;
  bool has_fraction = false;
};

/// Throws Error{parse} on malformed cells or ragged rows.
ParsedMatrix parse_matrix(std::string_view text);

std::vector<double> to_doubles(const std::vector<Rational>& v);
std::vector<std::vector<double>> to_doubles(const std::vector<std::vector<Rational>>& m);

}  // namespace ditlogic
