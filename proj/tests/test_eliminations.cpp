#include "doctest.h"
#include "ppcalc/dsl.hpp"
#include "ppcalc/eliminations.hpp"
#include "ppcalc/fixtures.hpp"

using namespace ppcalc;

TEST_CASE("qe over z6 finds x*3 = 0 for 2|x") {
  RingoidPtr z6 = fixture_ringoid("z6");
  PpFormula div2 = parse_formula("E y . x + y*2 = 0", DslContext{z6, Side::right});
  QeResult q = qe_search(div2, 3);
  REQUIRE(q.kind == QeResult::Kind::found);
  PpFormula ann3 = parse_formula("x*3 = 0", DslContext{z6, Side::right});
  CHECK(equivalent(*q.quantifier_free, ann3));
  CHECK(q.quantifier_free->num_bound() == 0);
}

TEST_CASE("qe over z4 certifies ProvablyNone for 2|x with three classes") {
  RingoidPtr z4 = fixture_ringoid("z4");
  PpFormula div2 = parse_formula("E y . x + y*2 = 0", DslContext{z4, Side::right});
  QeResult q = qe_search(div2, 3);
  REQUIRE(q.kind == QeResult::Kind::provably_none);
  CHECK(q.checked_classes.size() == 3);
  // the three classes are x=x, x*2=0, x=0 up to equivalence
  DslContext ctx{z4, Side::right};
  std::vector<PpFormula> expect = {parse_formula("x = x", ctx), parse_formula("x*2 = 0", ctx),
                                   parse_formula("x = 0", ctx)};
  for (const PpFormula& e : expect) {
    bool found = false;
    for (const PpFormula& c : q.checked_classes)
      if (equivalent(c, e)) found = true;
    CHECK(found);
  }
  // pairwise inequivalent
  for (std::size_t i = 0; i < q.checked_classes.size(); ++i)
    for (std::size_t j = i + 1; j < q.checked_classes.size(); ++j)
      CHECK(!equivalent(q.checked_classes[i], q.checked_classes[j]));
}

TEST_CASE("quantifier-free input returned as found") {
  RingoidPtr z4 = fixture_ringoid("z4");
  PpFormula ann = parse_formula("x*2 = 0", DslContext{z4, Side::right});
  QeResult q = qe_search(ann, 2);
  REQUIRE(q.kind == QeResult::Kind::found);
  CHECK(equivalent(*q.quantifier_free, ann));
}

TEST_CASE("embed over z6: (x=x)/(2|x) embeds via y = x*3") {
  RingoidPtr z6 = fixture_ringoid("z6");
  DslContext ctx{z6, Side::right};
  PpPair p = make_pair(parse_formula("x = x", ctx), parse_formula("E y . x + y*2 = 0", ctx));
  SearchBounds b;
  EmbedResult e = embed_search(p, default_home_sorts(z6), b);
  REQUIRE(e.kind == EmbedResult::Kind::monic);
  // the kernel of the found morphism must be trivial (top == bottom)
  KernelCokernelImage kci = kernel_cokernel_image(*e.mono);
  CHECK(equivalent(kci.kernel.top, kci.kernel.bottom));
}

TEST_CASE("embed over z4: (x=x)/(2|x) embeds via y = x*2") {
  RingoidPtr z4 = fixture_ringoid("z4");
  DslContext ctx{z4, Side::right};
  PpPair p = make_pair(parse_formula("x = x", ctx), parse_formula("E y . x + y*2 = 0", ctx));
  SearchBounds b;
  EmbedResult e = embed_search(p, default_home_sorts(z4), b);
  REQUIRE(e.kind == EmbedResult::Kind::monic);
  KernelCokernelImage kci = kernel_cokernel_image(*e.mono);
  CHECK(equivalent(kci.kernel.top, kci.kernel.bottom));
}

TEST_CASE("embed over z4: (x*2=0)/(2|x) is not found within small bounds") {
  RingoidPtr z4 = fixture_ringoid("z4");
  DslContext ctx{z4, Side::right};
  PpPair p = make_pair(parse_formula("x*2 = 0", ctx), parse_formula("E y . x + y*2 = 0", ctx));
  SearchBounds b;
  b.max_bound_vars = 0;
  b.max_cols = 1;
  b.raw_cap = 300;
  EmbedResult e = embed_search(p, {{0}}, b);
  CHECK(e.kind == EmbedResult::Kind::not_found);
}

TEST_CASE("thm52 harness on the fixture rings") {
  FamilyParams fp;
  fp.max_free = 2;
  fp.max_bound = 1;
  fp.max_cols = 1;
  fp.raw_cap_per_signature = 200;
  SearchBounds b;
  b.max_bound_vars = 1;
  b.max_cols = 2;
  b.raw_cap = 2000;

  Thm52Report r6 = thm52_harness(fixture_ringoid("z6"), fp, b, 15);
  CHECK(r6.vnr);
  CHECK(!r6.anomaly);
  CHECK(r6.qe_not_found == 0);
  CHECK(r6.qe_provably_none == 0);
  CHECK(r6.embed_not_found == 0);
  CHECK(r6.embed_monic == r6.pairs);

  Thm52Report r4 = thm52_harness(fixture_ringoid("z4"), fp, b, 5);
  CHECK(!r4.vnr);
  CHECK(!r4.anomaly);  // anomalies only flag VNR inconsistencies
  CHECK(r4.qe_provably_none > 0);

  Thm52Report r1 = thm52_harness(fixture_ringoid("z1"), fp, b, 3);
  CHECK(r1.vnr);
  CHECK(!r1.anomaly);
}
