#pragma once

#include <ditlogic/rational.hpp>

#include <cstdint>
#include <string>

#include "json.hpp"

namespace ditlogic::cli {

using Json = nlohmann::ordered_json;

/// JSON number for finite values; "+inf", "-inf" or "nan" otherwise.
Json number(double v);

/// One command's result: {command, inputs, outputs, residuals}. Every output
/// and residual is a record {value, unit[, exact]}.
class Report {
 public:
  explicit Report(std::string command);

  Json& inputs() { return doc_["inputs"]; }

  void quantity(const std::string& name, double v, const std::string& unit);
  void quantity(const std::string& name, const Rational& v, const std::string& unit);
  void count(const std::string& name, std::uint64_t v);
  void flag(const std::string& name, bool v);
  void text(const std::string& name, const std::string& v, const std::string& unit);
  void raw(const std::string& name, Json record);

  void residual(const std::string& name, double v, const std::string& unit);
  void residual(const std::string& name, const Rational& v, const std::string& unit);

  const Json& json() const { return doc_; }
  std::string pretty() const;

 private:
  Json doc_;
};

}  // namespace ditlogic::cli
