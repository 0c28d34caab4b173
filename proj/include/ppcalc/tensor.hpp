#pragma once

#include "ppcalc/module.hpp"

namespace ppcalc {

// M (x)_R N for a right module M and left module N: the direct sum of the
// groupwise tensors M(P) (x) N(P) modulo (m.r (x) n) - (m (x) r.n) over a
// generating set of morphisms, reduced by integer Smith normal form.
struct TensorProduct {
  ModulePtr m_right, n_left;
  FinAbGroup group;

  struct Symbol {
    ObjId p;
    int a, b;  // generator indices into M(p), N(p)
  };
  std::vector<Symbol> symbols;
  IntMat v, vinv;
  std::vector<int> kept;

  Elem project(const std::vector<Int>& symbol_vec) const;
  std::vector<Int> lift(const Elem& cls) const;
  Elem class_of_single(ObjId p, const Elem& me, const Elem& ne) const;
  Elem class_of(const SortedTuple& r, const SortedTuple& s) const;
};

TensorProduct tensor(const ModulePtr& m_right, const ModulePtr& n_left);

// 1_M (x) g for a left-module map g: N -> N'.
GroupHom tensor_induced_left(const TensorProduct& src, const TensorProduct& tgt,
                             const ModuleMap& g);

}  // namespace ppcalc
