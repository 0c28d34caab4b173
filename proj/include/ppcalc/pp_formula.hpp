#pragma once

#include "ppcalc/module.hpp"

namespace ppcalc {

// A pp formula: E y_1..y_m . (x y) H = 0, stored as the matrix H with one row
// per variable (free rows first) and one column per equation. For right
// formulas the entry in row of a variable of sort S and column of equation
// sort R is a morphism R -> S; for left formulas S -> R. Either way its
// action maps the variable fiber into the equation fiber.
struct PpFormula {
  Side side = Side::right;
  RingoidPtr ringoid;
  std::vector<ObjId> free_sorts;
  std::vector<ObjId> bound_sorts;
  std::vector<ObjId> rel_sorts;
  std::vector<std::vector<Morph>> h;  // (n+m) rows, k columns

  int num_free() const { return static_cast<int>(free_sorts.size()); }
  int num_bound() const { return static_cast<int>(bound_sorts.size()); }
  int num_cols() const { return static_cast<int>(rel_sorts.size()); }
  ObjId var_sort(int i) const {
    return i < num_free() ? free_sorts[static_cast<std::size_t>(i)]
                          : bound_sorts[static_cast<std::size_t>(i - num_free())];
  }
  void validate() const;  // throws on malformed matrices
  bool same_signature(const PpFormula& o) const {
    return side == o.side && free_sorts == o.free_sorts;
  }
};

// x = x and x = 0 on the given free sorts.
PpFormula trivial_formula(const RingoidPtr& r, Side side, std::vector<ObjId> sorts);
PpFormula zero_formula(const RingoidPtr& r, Side side, std::vector<ObjId> sorts);

// Annihilator conjunction of one free variable (right side): x*g = 0 per gen.
PpFormula annihilator_formula(const RingoidPtr& r, Side side, ObjId sort,
                              const std::vector<Morph>& gens);

PpFormula conj(const PpFormula& a, const PpFormula& b);
PpFormula sum_formula(const PpFormula& a, const PpFormula& b);
// Push the free variables with drop[i] = true into the bound block.
PpFormula exists_project(const PpFormula& f, const std::vector<bool>& drop);
PpFormula rename_free(const PpFormula& f, const std::vector<int>& perm);

// Evaluation: the solution subgroup inside the product of the free fibers.
struct EvaluatedSet {
  ProductGroup prod;  // product of free fibers
  Subgroup sols;

  Int order() const { return sols.order(); }
  bool contains(const SortedTuple& t) const;
  SortedTuple tuple_at(std::size_t pos) const;
  std::vector<ObjId> sorts;
};
EvaluatedSet evaluate(const PpFormula& f, const ModulePtr& m);

struct FreeRealization {
  ModulePtr module;
  SortedTuple point;
};
FreeRealization free_realization(const PpFormula& f);

struct ImpliesResult {
  bool holds = false;
  FreeRealization counterexample;  // meaningful on !holds
};
ImpliesResult implies(const PpFormula& psi, const PpFormula& phi);  // psi <= phi ?
bool equivalent(const PpFormula& a, const PpFormula& b);

// Generator of the pp-type of a tuple in a finite module.
PpFormula principal_type(const SortedTuple& a, const ModulePtr& m);

// phi(R): the left ideal a one-free-variable right formula defines on the
// representables, with an explicit finite generator list.
LeftIdeal pp_ideal(const PpFormula& phi);

// card(phi(M)/psi(M)); requires psi <= phi.
Int invariant(const PpFormula& phi, const PpFormula& psi, const ModulePtr& m);

}  // namespace ppcalc
