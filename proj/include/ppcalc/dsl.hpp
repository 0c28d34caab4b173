#pragma once

#include <string>

#include "ppcalc/pp_formula.hpp"

namespace ppcalc {

// One-line pp formula syntax:
//   E y1:Q, y2:Q . x1*r + y1*s = 0 ; y2*t = 0
// `E` introduces bound variables; atoms are linear expressions equated to 0
// (or to each other); `var*coef` is right-module application, `coef*var`
// left-module. Coefficients are integers (times the identity), generator
// names, or integer-scaled generator names like 2e. Free variables are the
// undeclared ones, in order of first appearance; sorts default to the unique
// object and are written var:Obj otherwise.
struct DslContext {
  RingoidPtr ringoid;
  Side default_side = Side::right;
};

PpFormula parse_formula(const std::string& text, const DslContext& ctx);
std::string print_formula(const PpFormula& f);

}  // namespace ppcalc
