#pragma once

#include "ppcalc/pp_formula.hpp"
#include "ppcalc/tensor.hpp"

namespace ppcalc {

// Elementary duality: [A over B] becomes [I A; 0 B] with the variable blocks
// re-sorted for the opposite variance. Involutive up to equivalence, antitone.
PpFormula dual(const PpFormula& f);

struct PpPair;  // defined in pp_pairs.hpp

// Herzog's criterion for a pair of matching-sorted tuples.
struct HerzogResult {
  bool tensor_zero = false;
  Elem tensor_class;      // class of r (x) s
  FinAbGroup tensor_group;
  // on tensor_zero: a witness formula with r in phi(M) and s in D(phi)(N),
  // both memberships re-verified
  PpFormula witness;
  bool memberships_verified = false;
};

HerzogResult herzog_check(const SortedTuple& r, const ModulePtr& m, const SortedTuple& s,
                          const ModulePtr& n);
HerzogResult herzog_check(const TensorProduct& t, const SortedTuple& r, const SortedTuple& s);

}  // namespace ppcalc
