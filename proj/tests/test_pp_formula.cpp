#include "doctest.h"
#include "ppcalc/duality.hpp"
#include "ppcalc/dsl.hpp"
#include "ppcalc/error.hpp"
#include "ppcalc/family.hpp"
#include "ppcalc/fixtures.hpp"

using namespace ppcalc;

namespace {

PpFormula div_by(const RingoidPtr& r, Elem coeff) {
  // exists y: x = y * c  over a one-object ringoid
  PpFormula f;
  f.side = Side::right;
  f.ringoid = r;
  f.free_sorts = {0};
  f.bound_sorts = {0};
  f.rel_sorts = {0};
  f.h.assign(2, {});
  f.h[0].push_back(r->identity(0));
  f.h[1].push_back(r->neg(Morph{0, 0, std::move(coeff)}));
  f.validate();
  return f;
}

PpFormula ann_by(const RingoidPtr& r, Elem coeff) {
  return annihilator_formula(r, Side::right, 0, {Morph{0, 0, std::move(coeff)}});
}

}  // namespace

TEST_CASE("evaluate: spec examples over z4 and a2") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);

  PpFormula d2 = div_by(z4, Elem{2});
  EvaluatedSet e1 = evaluate(d2, reg);
  CHECK(e1.order() == 2);
  CHECK(e1.contains(SortedTuple{{0}, {Elem{2}}}));
  CHECK(evaluate(d2, z2).order() == 1);

  PpFormula triv = trivial_formula(z4, Side::right, {0});
  CHECK(evaluate(triv, reg).order() == 4);

  RingoidPtr a2 = fixture_ringoid("a2f2");
  ObjId p = *a2->object_by_name("P"), q = *a2->object_by_name("Q");
  ModulePtr rq = representable(a2, q, Side::right);
  // exists y_Q (x_P = y_Q * r): solution set is all of M(P) on (-,Q)
  PpFormula f;
  f.side = Side::right;
  f.ringoid = a2;
  f.free_sorts = {p};
  f.bound_sorts = {q};
  f.rel_sorts = {p};
  f.h.assign(2, {});
  f.h[0].push_back(a2->identity(p));
  f.h[1].push_back(a2->neg(*a2->named_generator("r")));
  f.validate();
  CHECK(evaluate(f, rq).order() == rq->fiber(p).order());
  // on (-,P) the image is zero
  ModulePtr rp = representable(a2, p, Side::right);
  CHECK(evaluate(f, rp).order() == 1);
}

TEST_CASE("conj/sum/exists_project semantics on z4") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  PpFormula d2 = div_by(z4, Elem{2});
  PpFormula a2f = ann_by(z4, Elem{2});
  // conj(2|x, x*2=0) on Z/4 = {0,2}
  CHECK(evaluate(conj(d2, a2f), reg).order() == 2);
  // sum(x=0, phi) == phi
  PpFormula z = zero_formula(z4, Side::right, {0});
  CHECK(equivalent(sum_formula(z, d2), d2));
  // exists_project of x0=x0 ; x1=x1 over x1 gives x0=x0
  PpFormula t2 = trivial_formula(z4, Side::right, {0, 0});
  PpFormula projected = exists_project(t2, {false, true});
  CHECK(equivalent(projected, trivial_formula(z4, Side::right, {0})));
  // intersection and sum sizes agree with brute force on Z/4: 2|x cap ann2 =
  // {0,2}, 2|x + ann2 = {0,2}
  CHECK(evaluate(sum_formula(d2, a2f), reg).order() == 2);
}

TEST_CASE("free realization: spec examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  FreeRealization fr = free_realization(div_by(z4, Elem{2}));
  CHECK(fr.module->order() == 4);
  EvaluatedSet ev = evaluate(div_by(z4, Elem{2}), fr.module);
  CHECK(ev.contains(fr.point));

  FreeRealization fr2 = free_realization(ann_by(z4, Elem{2}));
  CHECK(fr2.module->order() == 2);

  FreeRealization fr3 = free_realization(zero_formula(z4, Side::right, {0}));
  CHECK(fr3.module->order() == 1);
}

TEST_CASE("implies and equivalent: spec examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  PpFormula d2 = div_by(z4, Elem{2});
  PpFormula a2f = ann_by(z4, Elem{2});
  CHECK(implies(d2, a2f).holds);
  ImpliesResult back = implies(a2f, d2);
  CHECK(!back.holds);
  CHECK(back.counterexample.module->order() == 2);  // (Z/2, 1)

  RingoidPtr z6 = fixture_ringoid("z6");
  CHECK(equivalent(div_by(z6, Elem{2}), ann_by(z6, Elem{3})));
  CHECK(!equivalent(div_by(z4, Elem{2}), ann_by(z4, Elem{2})));
  CHECK(equivalent(d2, d2));
  // reflexive and transitive on a small family
  PpFormula triv = trivial_formula(z4, Side::right, {0});
  CHECK(implies(d2, triv).holds);
  CHECK(implies(a2f, triv).holds);
}

TEST_CASE("principal types: spec examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);

  PpFormula t1 = principal_type(SortedTuple{{0}, {Elem{2}}}, reg);
  CHECK(equivalent(t1, div_by(z4, Elem{2})));
  PpFormula t2 = principal_type(SortedTuple{{0}, {Elem{1}}}, z2);
  CHECK(equivalent(t2, ann_by(z4, Elem{2})));
  PpFormula t3 = principal_type(SortedTuple{{0}, {Elem{0}}}, reg);
  CHECK(equivalent(t3, zero_formula(z4, Side::right, {0})));

  // generator property: a in chi(M) implies t <= chi, over the sampled family
  std::vector<ModulePtr> panel = fingerprint_panel(z4, Side::right);
  FamilyParams params;
  params.max_free = 1;
  for (const PpFormula& chi : sampled_formula_family(z4, Side::right, params, panel)) {
    if (evaluate(chi, reg).contains(SortedTuple{{0}, {Elem{2}}})) CHECK(implies(t1, chi).holds);
    if (evaluate(chi, z2).contains(SortedTuple{{0}, {Elem{1}}})) CHECK(implies(t2, chi).holds);
  }
}

TEST_CASE("pp_ideal: spec examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  LeftIdeal i1 = pp_ideal(div_by(z4, Elem{2}));
  CHECK(i1.parts[0].order() == 2);
  REQUIRE(i1.generators.size() == 1);
  CHECK(i1.generators[0].coeffs == Elem{2});

  LeftIdeal i2 = pp_ideal(trivial_formula(z4, Side::right, {0}));
  CHECK(i2.parts[0].order() == 4);

  RingoidPtr a2 = fixture_ringoid("a2f2");
  ObjId p = *a2->object_by_name("P"), q = *a2->object_by_name("Q");
  PpFormula f;
  f.side = Side::right;
  f.ringoid = a2;
  f.free_sorts = {p};
  f.bound_sorts = {q};
  f.rel_sorts = {p};
  f.h.assign(2, {});
  f.h[0].push_back(a2->identity(p));
  f.h[1].push_back(a2->neg(*a2->named_generator("r")));
  f.validate();
  LeftIdeal i3 = pp_ideal(f);
  CHECK(i3.parts[static_cast<std::size_t>(p)].order() == 1);
  CHECK(i3.parts[static_cast<std::size_t>(q)].order() == 2);

  CHECK_THROWS_AS(pp_ideal(trivial_formula(z4, Side::right, {0, 0})), Error);
}

TEST_CASE("invariant: spec examples and NotAPair") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  PpFormula d2 = div_by(z4, Elem{2});
  PpFormula a2f = ann_by(z4, Elem{2});
  CHECK(invariant(a2f, d2, reg) == 1);
  CHECK(invariant(a2f, d2, z2) == 2);
  CHECK(invariant(d2, d2, reg) == 1);
  CHECK_THROWS_AS(invariant(d2, a2f, reg), Error);
}

TEST_CASE("monotonicity and additivity of evaluation") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  std::vector<ModulePtr> panel = fingerprint_panel(z4, Side::right);
  FamilyParams params;
  params.max_free = 2;
  params.max_bound = 1;
  params.max_cols = 1;
  auto family = sampled_formula_family(z4, Side::right, params, panel);
  REQUIRE(family.size() > 4);
  ModulePtr sum = direct_sum(reg, z2);
  for (const PpFormula& f : family) {
    // additivity: |phi(M + N)| = |phi(M)| * |phi(N)|
    CHECK(evaluate(f, sum).order() == evaluate(f, reg).order() * evaluate(f, z2).order());
    // monotonicity under every map reg -> z2
    for (const ModuleMap& g : hom_set(reg, z2)) {
      EvaluatedSet from = evaluate(f, reg);
      EvaluatedSet to = evaluate(f, z2);
      for (Int pos = 0; pos < from.order(); ++pos) {
        SortedTuple t = from.tuple_at(static_cast<std::size_t>(pos));
        CHECK(to.contains(g.apply_tuple(t)));
      }
    }
  }
}
