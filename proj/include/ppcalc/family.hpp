#pragma once

#include <functional>

#include "ppcalc/pp_formula.hpp"

namespace ppcalc {

// Canonical bounded enumeration of formulas with the given free signature.
// The callback returns false to stop. Raw spaces beyond raw_cap are sampled
// with a deterministic stride.
void enumerate_formulas(const RingoidPtr& r, Side side, const std::vector<ObjId>& free_sorts,
                        int max_bound_vars, int max_cols, std::size_t raw_cap,
                        const std::function<bool(PpFormula&&)>& cb);

struct FamilyParams {
  int max_free = 2;
  int max_bound = 2;
  int max_cols = 2;
  std::size_t raw_cap_per_signature = 2000;
};

// Deduplicated (by `equivalent`) formula family in canonical enumeration
// order; the panel is used to bucket candidates before the exact check.
std::vector<PpFormula> sampled_formula_family(const RingoidPtr& r, Side side,
                                              const FamilyParams& params,
                                              const std::vector<ModulePtr>& panel);

// Small evaluation panel and one-variable probe formulas (annihilators and
// divisibility conditions for every morphism).
std::vector<ModulePtr> fingerprint_panel(const RingoidPtr& r, Side side);
std::vector<PpFormula> probe_formulas(const RingoidPtr& r, Side side);

std::vector<ModulePtr> simple_modules(const RingoidPtr& r, Side side);

// Submodules of f of index <= max_index (descent through maximal submodules).
std::vector<std::vector<Subgroup>> submodules_of_index_at_most(const ModulePtr& f, Int max_index);

// All isomorphism classes of modules of order <= max_order.
std::vector<ModulePtr> all_modules_up_to(const RingoidPtr& r, Side side, Int max_order);

bool modules_isomorphic(const ModulePtr& a, const ModulePtr& b);

}  // namespace ppcalc
