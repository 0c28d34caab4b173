#include "doctest.h"
#include "ppcalc/dsl.hpp"
#include "ppcalc/error.hpp"
#include "ppcalc/family.hpp"
#include "ppcalc/fixtures.hpp"
#include "ppcalc/purity.hpp"

using namespace ppcalc;

TEST_CASE("pure submodule: spec examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr reg = fixture_module("regular", z4, Side::right);

  // {0, 2} in Z/4 is not pure; witness equivalent to 2|x
  std::vector<Subgroup> parts{Subgroup::generate(reg->fiber(0), {Elem{2}})};
  SubmodulePart sub = submodule_from_subgroups(reg, parts, "2Z4");
  PurityResult pr = is_pure_submodule(sub.incl);
  CHECK(!pr.pure);
  REQUIRE(pr.witness_formula.has_value());
  PpFormula div2 = parse_formula("E y . x + y*2 = 0", DslContext{z4, Side::right});
  CHECK(equivalent(*pr.witness_formula, div2));

  // first coordinate Z/2 in Z/2 + Z/4 is pure (a direct summand)
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr sum = direct_sum(z2, reg);
  ModuleMap inj = sum_injection(sum, z2, reg, 0);
  CHECK(is_pure_submodule(inj).pure);

  // identity is pure
  CHECK(is_pure_submodule(ModuleMap::identity(reg)).pure);

  // non-mono rejected
  QuotientPart qp = quotient_by_subgroups(reg, parts, "Z2");
  CHECK_THROWS_AS(is_pure_submodule(qp.proj), Error);
}

TEST_CASE("pure epi: spec examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  std::vector<Subgroup> parts{Subgroup::generate(reg->fiber(0), {Elem{2}})};
  QuotientPart qp = quotient_by_subgroups(reg, parts, "Z2");
  PureEpiResult pe = is_pure_epi(qp.proj);
  CHECK(!pe.pure_epi);
  REQUIRE(pe.failing_formula.has_value());

  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr sum = direct_sum(reg, z2);
  CHECK(is_pure_epi(sum_projection(sum, reg, z2, 1)).pure_epi);
  CHECK(is_pure_epi(ModuleMap::identity(reg)).pure_epi);
}

TEST_CASE("flatness: spec examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  CHECK(is_flat(fixture_module("regular", z4, Side::right)).flat);
  FlatResult f = is_flat(fixture_module("z2-over-z4", z4, Side::right));
  CHECK(!f.flat);
  REQUIRE(f.failing_ideal.has_value());
  CHECK((*f.failing_ideal)[0].order() == 2);

  RingoidPtr z6 = fixture_ringoid("z6");
  // Z/2 over Z/6 is projective, hence flat
  auto pm = finitely_presented(z6, Side::right, {0}, {0}, {{Morph{0, 0, Elem{3}}}});
  CHECK(pm.module->order() == 3);  // z6/(3) = Z/3
  auto pm2 = finitely_presented(z6, Side::right, {0}, {0}, {{Morph{0, 0, Elem{2}}}});
  CHECK(pm2.module->order() == 2);
  CHECK(is_flat(pm2.module).flat);
}

TEST_CASE("flat formula check: Thm 3.5 shape") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  PpFormula ann2 = parse_formula("x*2 = 0", DslContext{z4, Side::right});
  CHECK(!flat_formula_check(z2, ann2));
  CHECK(flat_formula_check(reg, ann2));
  PpFormula triv = parse_formula("x = x", DslContext{z4, Side::right});
  CHECK(flat_formula_check(z2, triv));
  CHECK(flat_formula_check(reg, triv));
}

TEST_CASE("absolute purity: spec examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  CHECK(is_absolutely_pure(fixture_module("regular", z4, Side::right)).absolutely_pure);
  AbsPureResult a = is_absolutely_pure(fixture_module("z2-over-z4", z4, Side::right));
  CHECK(!a.absolutely_pure);
  REQUIRE(a.failing_ideal.has_value());
  CHECK(is_absolutely_pure(fixture_module("zero", z4, Side::right)).absolutely_pure);
}

TEST_CASE("abspure formula check: Thm 3.6 shape") {
  RingoidPtr z4 = fixture_ringoid("z4");
  ModulePtr z2 = fixture_module("z2-over-z4", z4, Side::right);
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  PpFormula div2 = parse_formula("E y . x + y*2 = 0", DslContext{z4, Side::right});
  CHECK(!abspure_formula_check(z2, div2));
  CHECK(abspure_formula_check(reg, div2));
  PpFormula triv = parse_formula("x = x", DslContext{z4, Side::right});
  CHECK(abspure_formula_check(z2, triv));
}

TEST_CASE("purity restricted to every one-variable formula when oracle says pure") {
  RingoidPtr f2e = fixture_ringoid("f2e");
  ModulePtr reg = fixture_module("regular", f2e, Side::right);
  ModulePtr s1 = fixture_module("s1", f2e, Side::right);
  ModulePtr sum = direct_sum(reg, s1);
  ModuleMap inj = sum_injection(sum, reg, s1, 0);
  REQUIRE(is_pure_submodule(inj).pure);
  std::vector<ModulePtr> panel = fingerprint_panel(f2e, Side::right);
  FamilyParams params;
  params.max_free = 1;
  for (const PpFormula& phi : sampled_formula_family(f2e, Side::right, params, panel)) {
    // phi(M) = M cap phi(N) under the embedding
    EvaluatedSet in_m = evaluate(phi, reg);
    EvaluatedSet in_n = evaluate(phi, sum);
    Int meet = 0;
    for (Int i = 0; i < reg->fiber(0).order(); ++i) {
      Elem e = reg->fiber(0).element_at(i);
      if (in_n.contains(SortedTuple{{0}, {inj.apply(0, e)}})) ++meet;
    }
    CHECK(meet == in_m.order());
  }
}
