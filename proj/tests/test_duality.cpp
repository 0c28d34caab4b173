#include "doctest.h"
#include "ppcalc/dsl.hpp"
#include "ppcalc/duality.hpp"
#include "ppcalc/family.hpp"
#include "ppcalc/fixtures.hpp"

using namespace ppcalc;

TEST_CASE("dual of x=x is x=0 and dual of divisibility is annihilation") {
  RingoidPtr z4 = fixture_ringoid("z4");
  DslContext ctx{z4, Side::right};
  PpFormula triv = parse_formula("x = x", ctx);
  PpFormula d = dual(triv);
  CHECK(d.side == Side::left);
  CHECK(equivalent(d, zero_formula(z4, Side::left, {0})));

  PpFormula div2 = parse_formula("E y . x + y*2 = 0", ctx);
  PpFormula dd = dual(div2);
  // expected: 2x = 0 as a left formula
  PpFormula ann2l = annihilator_formula(z4, Side::left, 0, {Morph{0, 0, Elem{2}}});
  CHECK(equivalent(dd, ann2l));
  CHECK(equivalent(dual(dual(div2)), div2));
}

TEST_CASE("duality is involutive and antitone on sampled families") {
  for (const char* name : {"z4", "f2e", "a2f2"}) {
    RingoidPtr r = fixture_ringoid(name);
    std::vector<ModulePtr> panel = fingerprint_panel(r, Side::right);
    FamilyParams params;
    params.max_free = 2;
    params.max_bound = 1;
    params.max_cols = 1;
    params.raw_cap_per_signature = 300;
    auto family = sampled_formula_family(r, Side::right, params, panel);
    REQUIRE(family.size() >= 5);
    for (const PpFormula& f : family) CHECK(equivalent(dual(dual(f)), f));
    for (const PpFormula& a : family)
      for (const PpFormula& b : family) {
        if (!a.same_signature(b)) continue;
        CHECK(implies(b, a).holds == implies(dual(a), dual(b)).holds);
      }
  }
}

TEST_CASE("duality exchanges conj and sum up to equivalence") {
  RingoidPtr z4 = fixture_ringoid("z4");
  DslContext ctx{z4, Side::right};
  PpFormula d2 = parse_formula("E y . x + y*2 = 0", ctx);
  PpFormula a2 = parse_formula("x*2 = 0", ctx);
  CHECK(equivalent(dual(conj(d2, a2)), sum_formula(dual(d2), dual(a2))));
  CHECK(equivalent(dual(sum_formula(d2, a2)), conj(dual(d2), dual(a2))));
}

TEST_CASE("herzog: spec examples over z4") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr regl = fixture_module("regular", z4, Side::left);

  HerzogResult h1 = herzog_check(SortedTuple{{0}, {Elem{1}}}, z2, SortedTuple{{0}, {Elem{2}}}, regl);
  CHECK(h1.tensor_zero);
  CHECK(h1.memberships_verified);
  PpFormula ann2 = annihilator_formula(z4, Side::right, 0, {Morph{0, 0, Elem{2}}});
  CHECK(equivalent(h1.witness, ann2));

  HerzogResult h2 = herzog_check(SortedTuple{{0}, {Elem{1}}}, z2, SortedTuple{{0}, {Elem{1}}}, regl);
  CHECK(!h2.tensor_zero);
  CHECK(h2.tensor_group.order() == 2);

  HerzogResult h3 = herzog_check(SortedTuple{{0}, {Elem{0}}}, z2, SortedTuple{{0}, {Elem{1}}}, regl);
  CHECK(h3.tensor_zero);
  CHECK(h3.memberships_verified);
}

TEST_CASE("herzog negative side: no sampled formula certifies a nonzero tensor") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr regl = fixture_module("regular", z4, Side::left);
  std::vector<ModulePtr> panel = fingerprint_panel(z4, Side::right);
  FamilyParams params;
  params.max_free = 1;
  auto family = sampled_formula_family(z4, Side::right, params, panel);
  // 1 (x) 1 is nonzero in Z/2 (x) Z/4; no sampled phi has 1 in phi(Z/2) and
  // 1 in Dphi(Z/4)
  for (const PpFormula& f : family) {
    bool r_in = evaluate(f, z2).contains(SortedTuple{{0}, {Elem{1}}});
    bool s_in = evaluate(dual(f), regl).contains(SortedTuple{{0}, {Elem{1}}});
    CHECK(!(r_in && s_in));
  }
}
