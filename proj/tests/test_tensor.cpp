#include "doctest.h"
#include "ppcalc/fixtures.hpp"
#include "ppcalc/tensor.hpp"

using namespace ppcalc;

TEST_CASE("tensor over z4: Z/2 (x) Z/2 and the class of 1 (x) 2") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr z2r = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr z2l = fixture_module("z2-over-z4", z4, Side::left);
  ModulePtr regl = fixture_module("regular", z4, Side::left);

  TensorProduct t = tensor(z2r, z2l);
  CHECK(t.group.order() == 2);

  TensorProduct t2 = tensor(z2r, regl);
  CHECK(t2.group.order() == 2);
  // 1 (x) 2 = (1*2) (x) 1 = 0
  Elem cls = t2.class_of_single(0, Elem{1}, Elem{2});
  CHECK(t2.group.is_zero(cls));
  Elem cls1 = t2.class_of_single(0, Elem{1}, Elem{1});
  CHECK(!t2.group.is_zero(cls1));
}

TEST_CASE("tensor with a representable recovers the fiber") {
  RingoidPtr a2 = fixture_ringoid("a2f2");
  ObjId q = *a2->object_by_name("Q");
  ModulePtr m = representable(a2, q, Side::right);
  ModulePtr nq = representable(a2, q, Side::left);
  TensorProduct t = tensor(m, nq);
  CHECK(t.group.order() == m->fiber(q).order());  // M (x) (Q,-) = MQ, order 2
  // and for the other representable
  ObjId p = *a2->object_by_name("P");
  ModulePtr np = representable(a2, p, Side::left);
  TensorProduct t2 = tensor(m, np);
  CHECK(t2.group.order() == m->fiber(p).order());
}

TEST_CASE("tensor distributes over direct sums (order check)") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  ModulePtr nl = fixture_module("z2-over-z4", z4, Side::left);
  Int a = tensor(z2, nl).group.order();
  Int b = tensor(reg, nl).group.order();
  CHECK(tensor(direct_sum(z2, reg), nl).group.order() == a * b);
}

TEST_CASE("induced map on an ideal inclusion detects non-flatness") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr regl = fixture_module("regular", z4, Side::left);
  // the ideal {0, 2} as a left module with its inclusion
  std::vector<Subgroup> parts{Subgroup::generate(regl->fiber(0), {Elem{2}})};
  SubmodulePart ideal = submodule_from_subgroups(regl, parts, "I");
  TensorProduct ti = tensor(z2, ideal.module);
  TensorProduct tr = tensor(z2, regl);
  CHECK(ti.group.order() == 2);
  GroupHom induced = tensor_induced_left(ti, tr, ideal.incl);
  CHECK(!induced.kernel_generators().empty());  // Z/2 (x) I -> Z/2 (x) R kills everything
}
