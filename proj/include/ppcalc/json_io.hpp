#pragma once

#include <string>

#include "ppcalc/module.hpp"

namespace ppcalc {

// A ringoid document:
// {
//   "name": "z4",
//   "objects": ["*"],
//   "homs": [{"dom": "*", "cod": "*", "factors": [4], "gens": ["1"]}],
//   "compose": [{"g": "1", "f": "1", "result": [1]}],     // g o f
//   "identities": [{"object": "*", "coords": [1]}]
// }
RingoidPtr ringoid_from_json_text(const std::string& text);

// A module document:
// {
//   "ringoid": "z4",                      // fixture name or path
//   "side": "right",
//   "fibers": [{"object": "*", "factors": [2]}],
//   "actions": [{"gen": "1", "matrix": [[1]]}]  // rows: images of fiber generators
// }
ModulePtr module_from_json_text(const std::string& text);

// name_or_path: fixture name, or a path to a JSON document.
RingoidPtr load_ringoid(const std::string& name_or_path);
ModulePtr load_module(const std::string& name_or_path, const RingoidPtr& r, Side side);

std::string read_file(const std::string& path);

}  // namespace ppcalc
