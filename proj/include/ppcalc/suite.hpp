#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppcalc {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the bundled reproduction suite (criteria 1-9); prints one line per
// criterion to `out` and returns the results.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

}  // namespace ppcalc
