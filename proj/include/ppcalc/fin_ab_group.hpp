#pragma once

#include <string>
#include <vector>

#include "ppcalc/int_mat.hpp"

namespace ppcalc {

// Coordinates of a group element, one entry per cyclic factor.
using Elem = std::vector<Int>;

// Finite abelian group presented as a product of cyclic groups Z/d_i.
// Factors need not form a divisibility chain (products of fibers do not);
// invariant_factors() gives the canonical chain when needed.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<Int> factors);

  int rank() const { return static_cast<int>(factors_.size()); }
  Int factor(int i) const { return factors_[i]; }
  const std::vector<Int>& factors() const { return factors_; }
  Int order() const { return order_; }
  bool trivial() const { return order_ == 1; }

  Elem zero() const { return Elem(factors_.size(), 0); }
  Elem reduce(Elem e) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem scale(Int c, const Elem& x) const;
  bool is_zero(const Elem& x) const;

  // Mixed-radix index; enumeration in index order is lexicographic in coords.
  Int index_of(const Elem& e) const;
  Elem element_at(Int idx) const;

  std::vector<Int> invariant_factors() const;  // canonical, no 1s

  static FinAbGroup product(const FinAbGroup& a, const FinAbGroup& b);
  bool same_shape(const FinAbGroup& o) const { return factors_ == o.factors_; }

  std::string describe() const;  // e.g. "Z/2 x Z/4" or "0"

 private:
  std::vector<Int> factors_;
  std::vector<Int> strides_;
  Int order_ = 1;
};

// Homomorphism between two groups, stored by images of the standard
// generators of the source.
struct GroupHom {
  FinAbGroup src, tgt;
  std::vector<Elem> img;  // img[i] in tgt, one per source factor

  static GroupHom zero(const FinAbGroup& s, const FinAbGroup& t);
  static GroupHom identity(const FinAbGroup& g);

  Elem apply(const Elem& x) const;
  bool well_defined() const;  // factor(i) * img[i] == 0 for all i
  bool is_identity() const;
  GroupHom compose_after(const GroupHom& inner) const;  // this o inner
  GroupHom plus(const GroupHom& o) const;
  GroupHom scaled(Int c) const;
  bool equal(const GroupHom& o) const;

  std::vector<Elem> kernel_generators() const;
  // One x with apply(x) = b, if any; exact, via Smith normal form.
  bool preimage(const Elem& b, Elem& out) const;
};

// Subgroup of an ambient group, materialized as a sorted index list.
class Subgroup {
 public:
  static Subgroup generate(const FinAbGroup& ambient, std::vector<Elem> gens);
  static Subgroup zero(const FinAbGroup& ambient);
  static Subgroup full(const FinAbGroup& ambient);

  const FinAbGroup& ambient() const { return ambient_; }
  const std::vector<Elem>& gens() const { return gens_; }
  const std::vector<Int>& elem_indices() const { return elems_; }
  Int order() const { return static_cast<Int>(elems_.size()); }
  bool contains(const Elem& e) const;
  bool contains_index(Int idx) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool same_elements(const Subgroup& other) const;
  Elem element(std::size_t pos) const { return ambient_.element_at(elems_[pos]); }

  // Abstract structure of this subgroup: group S, inclusion S -> ambient,
  // and coordinates of any member.
  struct Abstract {
    FinAbGroup group;
    GroupHom incl;       // group -> ambient
    IntMat express_mat;  // V from the relation-lattice SNF
    std::vector<int> kept;
    std::vector<Elem> gen_elems;
    Elem express(const Subgroup& owner, const Elem& ambient_elem) const;
  };
  Abstract abstract_structure() const;

 private:
  FinAbGroup ambient_;
  std::vector<Elem> gens_;
  std::vector<Int> elems_;  // sorted
};

// Quotient of `ambient` by the subgroup generated by `subgens`, with a
// projection hom and a lift (section) back into the ambient group.
struct QuotientWithMaps {
  FinAbGroup group;
  GroupHom proj;  // ambient -> group
  IntMat vinv;    // lift data
  std::vector<int> kept;
  FinAbGroup ambient;

  Elem lift(const Elem& q) const;
};

QuotientWithMaps quotient_by(const FinAbGroup& ambient, const std::vector<Elem>& subgens);

// Homogeneous linear system over finite abelian groups: find all tuples
// (x_1..x_t), x_i in vars.parts[i], with sum_i coeff(i,j)(x_i) = 0 for each
// equation j. coeff may return nullptr for a zero block.
struct LinearSystem {
  const struct ProductGroup* vars;
  std::vector<FinAbGroup> eqs;
  std::vector<const GroupHom*> coeff;  // row-major [var][eq], nullptr = zero

  const GroupHom* at(int i, int j) const { return coeff[static_cast<std::size_t>(i) * eqs.size() + static_cast<std::size_t>(j)]; }
};

// Generators of the solution subgroup of the flat product, by integer
// elimination over the invariant factors (exact, no enumeration).
std::vector<Elem> solve_homogeneous_gens(const LinearSystem& sys);
// Same subgroup by brute enumeration (ambient must be small).
std::vector<Elem> solve_homogeneous_enum(const LinearSystem& sys);

// Product of several groups with tuple <-> flat coordinate bookkeeping.
struct ProductGroup {
  FinAbGroup group;
  std::vector<FinAbGroup> parts;
  std::vector<int> offset;  // offset[i] = first coordinate of part i

  explicit ProductGroup(std::vector<FinAbGroup> ps);
  Elem pack(const std::vector<Elem>& tuple) const;
  std::vector<Elem> unpack(const Elem& flat) const;
  Elem part_of(const Elem& flat, int i) const;
};

}  // namespace ppcalc
