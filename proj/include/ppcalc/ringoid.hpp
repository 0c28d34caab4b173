#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ppcalc/fin_ab_group.hpp"

namespace ppcalc {

using ObjId = int;

// A morphism of a ringoid: an element of hom(dom, cod) in generator coords.
struct Morph {
  ObjId dom = 0;
  ObjId cod = 0;
  Elem coeffs;

  bool operator==(const Morph& o) const = default;
};

// Finite preadditive category. Hom groups are finite abelian groups;
// composition is stored on hom-group generators and extended bilinearly.
class Ringoid {
 public:
  struct Spec {
    std::vector<std::string> objects;
    // hom factors per ordered pair (dom, cod); missing = trivial group
    std::map<std::pair<ObjId, ObjId>, std::vector<Int>> homs;
    // compose[{p,q,s}][g][f] = coords in hom(p,s) of (gen g of hom(q,s)) o (gen f of hom(p,q))
    std::map<std::tuple<ObjId, ObjId, ObjId>, std::vector<std::vector<Elem>>> compose;
    std::vector<Elem> identities;  // per object, coords in hom(p,p)
    // names for DSL I/O: generator names per ordered pair, in factor order
    std::map<std::pair<ObjId, ObjId>, std::vector<std::string>> gen_names;
    std::string name;
  };

  // Validates all axioms; throws Error(Errc::axiom_violation) with a witness.
  static std::shared_ptr<const Ringoid> build(Spec spec);

  int num_objects() const { return static_cast<int>(object_names_.size()); }
  const std::string& object_name(ObjId p) const { return object_names_[static_cast<std::size_t>(p)]; }
  std::optional<ObjId> object_by_name(const std::string& n) const;
  const std::string& name() const { return name_; }

  const FinAbGroup& hom(ObjId p, ObjId q) const { return homs_[pair_index(p, q)]; }
  Morph zero_morph(ObjId p, ObjId q) const { return Morph{p, q, hom(p, q).zero()}; }
  Morph identity(ObjId p) const { return Morph{p, p, identities_[static_cast<std::size_t>(p)]}; }
  bool is_zero(const Morph& m) const { return hom(m.dom, m.cod).is_zero(m.coeffs); }

  // g o f, for f: P -> Q and g: Q -> S.
  Morph compose(const Morph& g, const Morph& f) const;
  Morph add(const Morph& a, const Morph& b) const;
  Morph neg(const Morph& a) const;

  std::vector<Morph> all_morphisms() const;            // every element of every hom group
  std::vector<Morph> morphisms_between(ObjId p, ObjId q) const;
  Int total_hom_order() const;

  std::shared_ptr<const Ringoid> opposite() const;

  // DSL support
  std::string morph_name(const Morph& m) const;                      // canonical display
  std::optional<Morph> named_generator(const std::string& n) const;  // lookup
  const std::vector<std::string>& gen_names(ObjId p, ObjId q) const {
    return gen_names_[pair_index(p, q)];
  }

 private:
  std::size_t pair_index(ObjId p, ObjId q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(num_objects()) +
           static_cast<std::size_t>(q);
  }
  Morph compose_gens(ObjId p, ObjId q, ObjId s, int g, int f) const;

  std::vector<std::string> object_names_;
  std::vector<FinAbGroup> homs_;
  std::vector<std::vector<std::vector<Elem>>> compose_;  // [pqs packed][g][f]
  std::vector<Elem> identities_;
  std::vector<std::vector<std::string>> gen_names_;
  std::string name_;
};

using RingoidPtr = std::shared_ptr<const Ringoid>;

bool structurally_equal(const Ringoid& a, const Ringoid& b);

// Decision result of the von Neumann regularity test.
struct VnrResult {
  bool regular = false;
  // on success: for each morphism r (in enumeration order) the first s with r s r = r
  std::vector<std::pair<Morph, Morph>> witnesses;
  std::optional<Morph> counterexample;
};

VnrResult is_von_neumann_regular(const Ringoid& r);

// Subfunctor of the representable (P, -): one subgroup of hom(P, Q) per Q.
struct LeftIdeal {
  RingoidPtr ringoid;
  ObjId base = 0;
  std::vector<Subgroup> parts;  // indexed by object Q, subgroup of hom(base, Q)
  std::vector<Morph> generators;

  Int total_order() const;
  bool contains(const Morph& m) const;
  bool same_parts(const LeftIdeal& o) const;
};

LeftIdeal ideal_generated(const RingoidPtr& r, ObjId base, const std::vector<Morph>& gens);

}  // namespace ppcalc
