#pragma once

#include <optional>

#include "ppcalc/duality.hpp"
#include "ppcalc/pp_formula.hpp"

namespace ppcalc {

// Purity of a monomorphism j: M -> N, decided by two independent oracles that
// must agree: a retraction search (finite modules are pure-injective, so pure
// = split) and the principal-type test on a generating tuple.
struct PurityResult {
  bool pure = false;
  std::optional<ModuleMap> retraction;       // on pure
  std::optional<PpFormula> witness_formula;  // on impure: phi with phi(M) != M^n cap phi(N)
  SortedTuple witness_tuple;
};
PurityResult is_pure_submodule(const ModuleMap& j);

struct PureEpiResult {
  bool pure_epi = false;
  std::optional<PpFormula> failing_formula;
  SortedTuple failing_tuple;
};
PureEpiResult is_pure_epi(const ModuleMap& p);

// Flatness over a one-object ringoid: 1_M (x) incl injective for every left
// ideal (all enumerated).
struct FlatResult {
  bool flat = false;
  std::optional<std::vector<Subgroup>> failing_ideal;  // parts of the failing left ideal
};
FlatResult is_flat(const ModulePtr& m);

// Thm-3.5-style check: phi(M) = M * phi(R), one free variable.
bool flat_formula_check(const ModulePtr& m, const PpFormula& phi);

// Absolute purity via Baer's criterion over the finitely many right ideals.
struct AbsPureResult {
  bool absolutely_pure = false;
  std::optional<std::vector<Subgroup>> failing_ideal;
  std::optional<ModuleMap> failing_map;  // ideal -> M with no extension
};
AbsPureResult is_absolutely_pure(const ModulePtr& m);

// Thm-3.6-style check: phi(M) = ann_M D(phi)(R), one free variable.
bool abspure_formula_check(const ModulePtr& m, const PpFormula& phi);

}  // namespace ppcalc
