#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ditlogic {

enum class ErrorKind {
  overlap,
  coverage,
  empty_block,
  element_out_of_range,
  empty_universe,
  universe_mismatch,
  size_mismatch,
  not_an_equivalence,
  limit_exceeded,
  domain,
  negative_entry,
  normalization,
  invalid_distance,
  unknown_selector,
  empty_input,
  parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every input or contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  /// Character offset into the parsed text, for parse errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace ditlogic
