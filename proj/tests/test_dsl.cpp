#include "doctest.h"
#include "ppcalc/dsl.hpp"
#include "ppcalc/error.hpp"
#include "ppcalc/family.hpp"
#include "ppcalc/fixtures.hpp"

using namespace ppcalc;

TEST_CASE("parse basic formulas over z4") {
  RingoidPtr z4 = fixture_ringoid("z4");
  DslContext ctx{z4, Side::right};
  PpFormula f = parse_formula("E y . x + y*2 = 0", ctx);
  CHECK(f.num_free() == 1);
  CHECK(f.num_bound() == 1);
  CHECK(f.num_cols() == 1);
  ModulePtr reg = fixture_module("regular", z4, Side::right);
  CHECK(evaluate(f, reg).order() == 2);

  PpFormula g = parse_formula("x = y*2", DslContext{z4, Side::right});
  // y undeclared: it is a second free variable here
  CHECK(g.num_free() == 2);

  PpFormula t = parse_formula("x = x", ctx);
  CHECK(t.num_cols() == 0);
  CHECK(evaluate(t, reg).order() == 4);

  PpFormula z = parse_formula("x = 0", ctx);
  CHECK(evaluate(z, reg).order() == 1);

  PpFormula a = parse_formula("x*2 = 0", ctx);
  CHECK(evaluate(a, reg).order() == 2);
}

TEST_CASE("parse with named generators over f2e and a2") {
  RingoidPtr f2e = fixture_ringoid("f2e");
  DslContext ctx{f2e, Side::right};
  ModulePtr reg = fixture_module("regular", f2e, Side::right);
  PpFormula ann = parse_formula("x*e = 0", ctx);
  CHECK(evaluate(ann, reg).order() == 2);
  PpFormula dv = parse_formula("E y . x + y*e = 0", ctx);
  CHECK(evaluate(dv, reg).order() == 2);
  // left-module style
  PpFormula lft = parse_formula("E y . x + e*y = 0", DslContext{f2e, Side::right});
  CHECK(lft.side == Side::left);

  RingoidPtr a2 = fixture_ringoid("a2f2");
  PpFormula fa = parse_formula("E y:Q . x:P + y*r = 0", DslContext{a2, Side::right});
  CHECK(fa.num_free() == 1);
  CHECK(fa.free_sorts[0] == *a2->object_by_name("P"));
  CHECK(fa.bound_sorts[0] == *a2->object_by_name("Q"));
}

TEST_CASE("parse errors carry positions") {
  RingoidPtr z4 = fixture_ringoid("z4");
  DslContext ctx{z4, Side::right};
  for (const char* bad : {"x +", "x = 1", "x * ", "E . x = 0", "x ** y", "x*q = 0"}) {
    try {
      parse_formula(bad, ctx);
      CHECK_MESSAGE(false, bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
      CHECK(std::string(e.what()).find("col") != std::string::npos);
    }
  }
}

TEST_CASE("print/parse round trip is equivalence-preserving") {
  for (const char* name : {"z4", "f2e", "a2f2"}) {
    RingoidPtr r = fixture_ringoid(name);
    FamilyParams params;
    params.max_free = 2;
    params.max_bound = 1;
    params.max_cols = 1;
    params.raw_cap_per_signature = 200;
    for (Side side : {Side::right, Side::left}) {
      std::vector<ModulePtr> panel = fingerprint_panel(r, side);
      auto family = sampled_formula_family(r, side, params, panel);
      for (const PpFormula& f : family) {
        std::string text = print_formula(f);
        PpFormula g = parse_formula(text, DslContext{r, side});
        CHECK(g.side == f.side);
        REQUIRE(g.free_sorts == f.free_sorts);
        CHECK_MESSAGE(equivalent(f, g), text);
      }
    }
  }
}
