#include "doctest.h"
#include "ppcalc/fin_ab_group.hpp"

using namespace ppcalc;

TEST_CASE("group arithmetic and indexing") {
  FinAbGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.index_of(g.element_at(5)) == 5);
  Elem a{1, 3}, b{1, 2};
  CHECK(g.add(a, b) == Elem{0, 1});
  CHECK(g.neg(a) == Elem{1, 1});
  CHECK(g.invariant_factors() == std::vector<Int>{2, 4});
  FinAbGroup h({4, 2});
  CHECK(h.invariant_factors() == std::vector<Int>{2, 4});
  FinAbGroup p({6, 2, 1});
  CHECK(p.invariant_factors() == std::vector<Int>{2, 6});
}

TEST_CASE("subgroup generation matches brute-force closure") {
  FinAbGroup g({2, 4});
  Subgroup s = Subgroup::generate(g, {Elem{1, 2}});
  CHECK(s.order() == 2);  // (1,2) + (1,2) = (0,0)
  Subgroup s2 = Subgroup::generate(g, {Elem{0, 1}});
  CHECK(s2.order() == 4);
  CHECK(Subgroup::full(g).order() == 8);
  CHECK(Subgroup::zero(g).order() == 1);
  CHECK(s2.contains(Elem{0, 3}));
  CHECK(!s2.contains(Elem{1, 0}));
}

TEST_CASE("quotient with maps: proj is a hom, lift is a section") {
  FinAbGroup g({4, 4});
  QuotientWithMaps q = quotient_by(g, {Elem{2, 0}, Elem{0, 1}});
  // (Z/4 x Z/4) / <(2,0),(0,1)> = Z/2
  CHECK(q.group.order() == 2);
  for (Int i = 0; i < g.order(); ++i)
    for (Int j = 0; j < g.order(); ++j) {
      Elem a = g.element_at(i), b = g.element_at(j);
      CHECK(q.proj.apply(g.add(a, b)) ==
            q.group.add(q.proj.apply(a), q.proj.apply(b)));
    }
  for (Int i = 0; i < q.group.order(); ++i) {
    Elem c = q.group.element_at(i);
    CHECK(q.proj.apply(q.lift(c)) == c);
  }
}

TEST_CASE("subgroup abstract structure: inclusion and express roundtrip") {
  FinAbGroup g({8, 2});
  Subgroup s = Subgroup::generate(g, {Elem{2, 0}, Elem{0, 1}});
  auto ab = s.abstract_structure();
  CHECK(ab.group.order() == s.order());
  for (Int i = 0; i < s.order(); ++i) {
    Elem e = s.element(static_cast<std::size_t>(i));
    Elem coords = ab.express(s, e);
    CHECK(ab.incl.apply(coords) == e);
  }
}

TEST_CASE("kernel generators and preimages") {
  FinAbGroup src({4}), tgt({4});
  GroupHom h;
  h.src = src;
  h.tgt = tgt;
  h.img = {Elem{2}};  // multiplication by 2
  Subgroup ker = Subgroup::generate(src, h.kernel_generators());
  CHECK(ker.order() == 2);
  CHECK(ker.contains(Elem{2}));
  Elem out;
  CHECK(h.preimage(Elem{2}, out));
  CHECK(h.apply(out) == Elem{2});
  CHECK(!h.preimage(Elem{1}, out));
}

TEST_CASE("linear system: elimination equals enumeration") {
  FinAbGroup a({4}), b({2, 2}), eq({4});
  ProductGroup vars({a, b});
  GroupHom ca;
  ca.src = a;
  ca.tgt = eq;
  ca.img = {Elem{1}};
  GroupHom cb;
  cb.src = b;
  cb.tgt = eq;
  cb.img = {Elem{2}, Elem{0}};
  LinearSystem sys;
  sys.vars = &vars;
  sys.eqs = {eq};
  sys.coeff = {&ca, &cb};
  Subgroup s1 = Subgroup::generate(vars.group, solve_homogeneous_gens(sys));
  Subgroup s2 = Subgroup::generate(vars.group, solve_homogeneous_enum(sys));
  CHECK(s1.same_elements(s2));
}
