#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ppcalc {

// Machine-readable command report; schema_version 1.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string decision;
  std::vector<std::string> witnesses;
  double wall_ms = 0;

  void add_input(std::string k, std::string v) { inputs.emplace_back(std::move(k), std::move(v)); }
  std::string to_text() const;
  std::string to_json() const;
};

void write_json_report(const Report& r, const std::string& path);

}  // namespace ppcalc
