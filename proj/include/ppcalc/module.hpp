#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ppcalc/ringoid.hpp"

namespace ppcalc {

enum class Side { left, right };

inline Side opposite_side(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

class Module;
using ModulePtr = std::shared_ptr<const Module>;

// A tuple of module elements with their sorts.
struct SortedTuple {
  std::vector<ObjId> sorts;
  std::vector<Elem> entries;

  std::size_t size() const { return sorts.size(); }
  bool operator==(const SortedTuple& o) const = default;
};

// Canonical finite presentation of a module: generators with sorts, relation
// columns, and per-object expression data.
struct Presentation {
  std::vector<ObjId> gen_sorts;
  std::vector<Elem> gen_values;          // the generators as module elements
  std::vector<ObjId> rel_sorts;          // one per relation column
  std::vector<std::vector<Morph>> cols;  // cols[v][u]: right: rel_sorts[v] -> gen_sorts[u]
};

// Finite module over a ringoid: one finite abelian group per object plus an
// action hom per hom-group generator, extended additively.
class Module {
 public:
  using Actions = std::vector<std::vector<GroupHom>>;  // [pair(p,q)][hom generator]

  // Validates shapes, identity actions and functoriality (exhaustively on all
  // composable pairs when feasible, on generator pairs otherwise -- the two
  // are equivalent since actions are bilinear by construction).
  static ModulePtr build(RingoidPtr r, Side side, std::vector<FinAbGroup> fibers, Actions actions,
                         std::string name = "");

  const RingoidPtr& ringoid() const { return ringoid_; }
  Side side() const { return side_; }
  const std::string& name() const { return name_; }
  const FinAbGroup& fiber(ObjId p) const { return fibers_[static_cast<std::size_t>(p)]; }
  int num_objects() const { return static_cast<int>(fibers_.size()); }
  Int order() const;
  bool is_zero_module() const { return order() == 1; }

  // For side=right and r: P -> Q this is fiber(Q) -> fiber(P); covariant for left.
  GroupHom action(const Morph& r) const;
  const GroupHom& gen_action(ObjId p, ObjId q, int gen) const;

  const Presentation& presentation() const;  // lazy canonical presentation
  // Express a as sum of generator actions: returns w with
  //   a = sum_u act(w[u])(gen_u), w[u]: (right) P -> gen_sorts[u].
  std::vector<Morph> express(ObjId p, const Elem& a) const;

  SortedTuple generator_tuple() const;  // canonical generators as a tuple

 private:
  std::size_t pair_index(ObjId p, ObjId q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(num_objects()) +
           static_cast<std::size_t>(q);
  }

  RingoidPtr ringoid_;
  Side side_ = Side::right;
  std::vector<FinAbGroup> fibers_;
  Actions actions_;
  std::string name_;
  mutable std::shared_ptr<const Presentation> pres_;
  mutable std::shared_ptr<const std::vector<GroupHom>> express_homs_;  // per object
};

// Natural map between modules of the same side.
struct ModuleMap {
  ModulePtr src, tgt;
  std::vector<GroupHom> comp;  // per object

  Elem apply(ObjId p, const Elem& e) const { return comp[static_cast<std::size_t>(p)].apply(e); }
  SortedTuple apply_tuple(const SortedTuple& t) const;
  bool injective() const;
  bool surjective() const;
  void check_natural() const;  // throws on violation
  static ModuleMap identity(const ModulePtr& m);
};

ModuleMap compose_maps(const ModuleMap& g, const ModuleMap& f);  // g after f
bool maps_equal(const ModuleMap& a, const ModuleMap& b);

ModulePtr representable(const RingoidPtr& r, ObjId p, Side side);
ModulePtr zero_module(const RingoidPtr& r, Side side);
ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);
// Injections/projections for a sum built by direct_sum.
ModuleMap sum_injection(const ModulePtr& sum, const ModulePtr& a, const ModulePtr& b, int which);
ModuleMap sum_projection(const ModulePtr& sum, const ModulePtr& a, const ModulePtr& b, int which);

// Quotient of the direct sum of representables on gen_sorts by the subfunctor
// generated by the relation columns; returns the module and the image of the
// canonical generator tuple.
struct PresentedModule {
  ModulePtr module;
  SortedTuple generators;
};
PresentedModule finitely_presented(const RingoidPtr& r, Side side,
                                   const std::vector<ObjId>& gen_sorts,
                                   const std::vector<ObjId>& rel_sorts,
                                   const std::vector<std::vector<Morph>>& cols);

// All natural maps M -> N, deterministically ordered (lexicographic in the
// coordinates of the generator images).
std::vector<ModuleMap> hom_set(const ModulePtr& m, const ModulePtr& n);

// Submodule machinery: a submodule is given by one subgroup per object,
// closed under the action maps.
std::vector<Subgroup> close_under_action(const ModulePtr& m, std::vector<std::vector<Elem>> gens);
struct SubmodulePart {
  ModulePtr module;
  ModuleMap incl;
};
SubmodulePart submodule_from_subgroups(const ModulePtr& m, const std::vector<Subgroup>& parts,
                                       std::string name = "");
struct QuotientPart {
  ModulePtr module;
  ModuleMap proj;
};
QuotientPart quotient_by_subgroups(const ModulePtr& m, const std::vector<Subgroup>& parts,
                                   std::string name = "");

struct MapFactorization {
  SubmodulePart kernel;
  SubmodulePart image;   // submodule of the target
  QuotientPart cokernel;
};
MapFactorization map_factor(const ModuleMap& f);

// All submodules of m (each as per-object subgroup list), enumerated by
// closure; requires order(m) within desk bounds.
std::vector<std::vector<Subgroup>> all_submodules(const ModulePtr& m);

bool tuple_in_module(const ModulePtr& m, const SortedTuple& t);

}  // namespace ppcalc
