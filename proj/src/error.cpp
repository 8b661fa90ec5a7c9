#include "ditlogic/error.hpp"

namespace ditlogic {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::overlap: return "overlap";
    case ErrorKind::coverage: return "coverage";
    case ErrorKind::empty_block: return "empty_block";
    case ErrorKind::element_out_of_range: return "element_out_of_range";
    case ErrorKind::empty_universe: return "empty_universe";
    case ErrorKind::universe_mismatch: return "universe_mismatch";
    case ErrorKind::size_mismatch: return "size_mismatch";
    case ErrorKind::not_an_equivalence: return "not_an_equivalence";
    case ErrorKind::limit_exceeded: return "limit_exceeded";
    case ErrorKind::domain: return "domain";
    case ErrorKind::negative_entry: return "negative_entry";
    case ErrorKind::normalization: return "normalization";
    case ErrorKind::invalid_distance: return "invalid_distance";
    case ErrorKind::unknown_selector: return "unknown_selector";
    case ErrorKind::empty_input: return "empty_input";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(message), kind_(kind), position_(position) {}

}  // namespace ditlogic
