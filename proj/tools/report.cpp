#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace ditlogic::cli {

namespace {

Json record(Json value, const std::string& unit) {
  Json r = Json::object();
  r["value"] = std::move(value);
  r["unit"] = unit;
  return r;
}

Json exact_record(const Rational& v, const std::string& unit) {
  Json r = record(number(to_double(v)), unit);
  r["exact"] = to_string(v);
  return r;
}

std::string show(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream out;
    out.precision(12);
    out << v.get<double>();
    return out.str();
  }
  return v.dump();
}

}  // namespace

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

Report::Report(std::string command) {
  doc_["command"] = std::move(command);
  doc_["inputs"] = Json::object();
  doc_["outputs"] = Json::object();
  doc_["residuals"] = Json::object();
}

void Report::quantity(const std::string& name, double v, const std::string& unit) {
  doc_["outputs"][name] = record(number(v), unit);
}

void Report::quantity(const std::string& name, const Rational& v, const std::string& unit) {
  doc_["outputs"][name] = exact_record(v, unit);
}

void Report::count(const std::string& name, std::uint64_t v) {
  doc_["outputs"][name] = record(v, "count");
}

void Report::flag(const std::string& name, bool v) {
  doc_["outputs"][name] = record(v, "boolean");
}

void Report::text(const std::string& name, const std::string& v, const std::string& unit) {
  doc_["outputs"][name] = record(v, unit);
}

void Report::raw(const std::string& name, Json r) { doc_["outputs"][name] = std::move(r); }

void Report::residual(const std::string& name, double v, const std::string& unit) {
  doc_["residuals"][name] = record(number(v), unit);
}

void Report::residual(const std::string& name, const Rational& v, const std::string& unit) {
  doc_["residuals"][name] = exact_record(v, unit);
}

std::string Report::pretty() const {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> blocks;
  const auto add_section = [&](const char* key) {
    for (const auto& [name, r] : doc_[key].items()) {
      if (r["value"].is_string() && r["value"].get<std::string>().find('\n') != std::string::npos) {
        blocks.emplace_back(name, r["value"].get<std::string>());
        continue;
      }
      std::string value = show(r["value"]);
      if (r.contains("exact") && r["exact"].get<std::string>() != value) {
        value = r["exact"].get<std::string>() + " = " + value;
      }
      if (r["value"].is_array()) value = std::to_string(r["value"].size()) + " items";
      rows.push_back({name, value, r.value("unit", "")});
    }
  };

  std::ostringstream out;
  out << doc_["command"].get<std::string>() << '\n';
  for (const auto& [name, v] : doc_["inputs"].items()) out << "  " << name << ": " << show(v) << '\n';

  for (const char* key : {"outputs", "residuals"}) {
    rows.clear();
    add_section(key);
    if (rows.empty()) continue;
    std::size_t w0 = 0, w1 = 0;
    for (const auto& r : rows) {
      w0 = std::max(w0, r[0].size());
      w1 = std::max(w1, r[1].size());
    }
    out << key << '\n';
    for (const auto& r : rows) {
      out << "  " << r[0] << std::string(w0 - r[0].size() + 2, ' ') << r[1]
          << std::string(w1 - r[1].size() + 2, ' ') << r[2] << '\n';
    }
  }
  for (const auto& [name, body] : blocks) out << name << '\n' << body;
  return out.str();
}

}  // namespace ditlogic::cli
