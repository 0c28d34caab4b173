#include "ppcalc/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ppcalc/error.hpp"

namespace ppcalc {

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& [k, v] : inputs) os << "  " << k << ": " << v << "\n";
  os << "decision: " << decision << "\n";
  for (const auto& w : witnesses) os << "  witness: " << w << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["command"] = command;
  nlohmann::json in = nlohmann::json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = in;
  j["decision"] = decision;
  j["witnesses"] = witnesses;
  j["timings"] = {{"wall_ms", wall_ms}};
  return j.dump(2);
}

void write_json_report(const Report& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::bad_input, "cannot write " + path);
  out << r.to_json() << "\n";
}

}  // namespace ppcalc
