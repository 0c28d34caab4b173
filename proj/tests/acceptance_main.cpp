#include <iostream>

#include "ppcalc/suite.hpp"

int main() {
  auto results = ppcalc::run_acceptance(std::cout);
  int failures = 0;
  double total = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    total += r.seconds;
  }
  std::cout << "acceptance: " << results.size() - static_cast<std::size_t>(failures) << "/"
            << results.size() << " criteria passed in " << static_cast<int>(total) << " s\n";
  return failures == 0 ? 0 : 1;
}
