#pragma once

#include <optional>

#include "ppcalc/family.hpp"
#include "ppcalc/pp_pairs.hpp"

namespace ppcalc {

// Quantifier-free equivalent search. Quantifier-free classes with fixed free
// sorts correspond to submodules of the matching sum of representables
// (columns generate the submodule; distinct submodules give inequivalent
// conjunctions), so when that sum is small the search is complete and can
// certify ProvablyNone.
struct QeResult {
  enum class Kind { found, provably_none, not_found } kind = Kind::not_found;
  std::optional<PpFormula> quantifier_free;
  std::vector<PpFormula> checked_classes;  // populated on provably_none
};
QeResult qe_search(const PpFormula& phi, int max_cols);

struct EmbedResult {
  enum class Kind { monic, not_found, not_embeddable } kind = Kind::not_found;
  std::optional<PpMorphism> mono;
  std::string certificate;
};
EmbedResult embed_search(const PpPair& p, const std::vector<std::vector<ObjId>>& home_sorts,
                         const SearchBounds& bounds);

struct Thm52Report {
  bool vnr = false;
  std::optional<Morph> vnr_counterexample;
  int formulas = 0;
  int qe_found = 0, qe_provably_none = 0, qe_not_found = 0;
  int pairs = 0;
  int embed_monic = 0, embed_not_found = 0, embed_not_embeddable = 0;
  bool anomaly = false;  // a VNR ringoid must pass every search
  std::vector<std::string> notes;
};
Thm52Report thm52_harness(const RingoidPtr& r, const FamilyParams& family_params,
                          const SearchBounds& bounds, std::size_t max_pairs);

// Default home sorts: every single object sort and every pair.
std::vector<std::vector<ObjId>> default_home_sorts(const RingoidPtr& r);

}  // namespace ppcalc
