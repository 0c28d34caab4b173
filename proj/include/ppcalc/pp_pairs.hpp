#pragma once

#include <optional>

#include "ppcalc/pp_formula.hpp"

namespace ppcalc {

struct PpPair {
  PpFormula top, bottom;  // bottom <= top, validated by make_pair
};

// Throws Errc::not_a_pair (with the counterexample realization) if the
// implication fails.
PpPair make_pair(const PpFormula& phi, const PpFormula& psi);

// Concrete value phi(M)/psi(M): abstract group plus coset bookkeeping.
struct PairValue {
  FinAbGroup group;
  EvaluatedSet top, bottom;
  QuotientWithMaps mod_bottom;
  Subgroup image_in_quot;
  Subgroup::Abstract abs;

  Int order() const { return group.order(); }
  Elem to_abstract(const SortedTuple& t) const;
  SortedTuple rep_of(const Elem& abstract_elem) const;
};
PairValue pair_value(const PpPair& p, const ModulePtr& m);

struct PpMorphism {
  PpPair source, target;
  PpFormula rho;  // free context: source frees then target frees
};

// Validates the four defining implications; throws Errc::rejected_morphism
// with the failing condition index otherwise.
PpMorphism make_morphism(const PpFormula& rho, const PpPair& source, const PpPair& target);
// Same check without exceptions.
struct MorphismCheck {
  bool ok = false;
  int failed_condition = 0;  // 1..4
  std::optional<FreeRealization> counterexample;
};
MorphismCheck check_morphism(const PpFormula& rho, const PpPair& source, const PpPair& target);
// Cheap necessary test on one module (used to prefilter searches).
bool morphism_plausible_on(const PpFormula& rho, const PpPair& source, const PpPair& target,
                           const ModulePtr& m);

struct KernelCokernelImage {
  PpPair kernel;
  PpMorphism kernel_incl;
  PpPair image;
  PpPair cokernel;
  PpMorphism cokernel_proj;
};
KernelCokernelImage kernel_cokernel_image(const PpMorphism& m);

// The group map pair_value(source, M) -> pair_value(target, M) realized by rho.
GroupHom morphism_on_module(const PpMorphism& m, const ModulePtr& mod);

bool is_closed_on(const PpPair& p, const ModulePtr& m);
bool serre_membership(const PpPair& p, const std::vector<ModulePtr>& generators);

struct SearchBounds {
  int max_bound_vars = 1;
  int max_cols = 2;
  std::size_t raw_cap = 20000;
};

struct LocalizedIsoResult {
  enum class Kind { iso, not_iso, not_found } kind = Kind::not_found;
  std::optional<PpMorphism> iso;
  std::string certificate;  // on not_iso
};
LocalizedIsoResult localized_iso(const PpPair& p, const PpPair& q,
                                 const std::vector<ModulePtr>& generators,
                                 const SearchBounds& bounds);

// Evaluation functor of Section-7 type: a left pair with one free variable
// gives a right module P |-> (phi/psi)((P,-)).
ModulePtr eval_pair_to_module(const PpPair& p);

// Convenience: the pair (x=x)/(x=0) on the given sorts.
PpPair home_sort_pair(const RingoidPtr& r, Side side, std::vector<ObjId> sorts);

}  // namespace ppcalc
