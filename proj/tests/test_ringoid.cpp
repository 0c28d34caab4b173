#include "doctest.h"
#include "ppcalc/error.hpp"
#include "ppcalc/fixtures.hpp"

using namespace ppcalc;

TEST_CASE("z4 builds and validates") {
  RingoidPtr r = fixture_ringoid("z4");
  CHECK(r->num_objects() == 1);
  CHECK(r->hom(0, 0).order() == 4);
  Morph two{0, 0, Elem{2}}, three{0, 0, Elem{3}};
  CHECK(r->compose(two, three) == Morph{0, 0, Elem{2}});  // 2*3 = 6 = 2 mod 4
  CHECK(r->compose(r->identity(0), two) == two);
}

TEST_CASE("a2 path category over F2") {
  RingoidPtr r = fixture_ringoid("a2f2");
  REQUIRE(r->num_objects() == 2);
  ObjId p = *r->object_by_name("P"), q = *r->object_by_name("Q");
  CHECK(r->hom(p, q).order() == 2);
  CHECK(r->hom(q, p).order() == 1);
  CHECK(r->hom(p, p).order() == 2);
  CHECK(r->hom(q, q).order() == 2);
  Morph arrow = *r->named_generator("r");
  CHECK(arrow.dom == p);
  CHECK(arrow.cod == q);
  CHECK(r->compose(r->identity(q), arrow) == arrow);
}

TEST_CASE("f2e as polynomial quotient matches f2e as quiver with loop relation") {
  RingoidPtr a = fixture_ringoid("f2e");
  QuiverSpec qs;
  qs.p = 2;
  qs.vertices = {"*"};
  qs.arrows = {{"e", "*", "*"}};
  qs.zero_relations = {{"e", "e"}};
  RingoidPtr b = make_path_category(qs);
  CHECK(structurally_equal(*a, *b));
}

TEST_CASE("broken identity axiom is rejected") {
  Ringoid::Spec spec;
  spec.objects = {"*"};
  spec.homs[{0, 0}] = {2, 2};
  spec.gen_names[{0, 0}] = {"1", "a"};
  // 1*1 = 1, 1*a = 0 (breaks identity), a*1 = a, a*a = 0
  spec.compose[{0, 0, 0}] = {{Elem{1, 0}, Elem{0, 0}}, {Elem{0, 1}, Elem{0, 0}}};
  spec.identities = {Elem{1, 0}};
  CHECK_THROWS_AS(Ringoid::build(std::move(spec)), Error);
}

TEST_CASE("associativity violation carries a witness triple") {
  // Z/2 basis {1, a}: set a*a = a, but also a*(a*a) vs (a*a)*a equal; instead
  // craft: a*a = 1 and a*1 = a, 1*a = a: that's Z/2 group algebra-like and is
  // associative. To force a violation use a*a = 1, and redefine (by table)
  // also 1*a = a, a*1 = a, 1*1 = 1 but then tweak a*(a) composed with a:
  // associativity of bilinear extension over generators can only break if the
  // generator table itself is non-associative:
  Ringoid::Spec spec;
  spec.objects = {"*"};
  spec.homs[{0, 0}] = {2, 2, 2};
  spec.gen_names[{0, 0}] = {"1", "a", "b"};
  auto e = [](Int x, Int y, Int z) { return Elem{x, y, z}; };
  // 1 acts as identity; a*a = b; a*b = 1; b*a = 1; b*b = 0
  // then (a*a)*a = b*a = 1 but a*(a*a) = a*b = 1 -- associative so far;
  // break it: set b*a = a instead: (a*a)*a = a, a*(a*a) = 1.
  spec.compose[{0, 0, 0}] = {
      {e(1, 0, 0), e(0, 1, 0), e(0, 0, 1)},
      {e(0, 1, 0), e(0, 0, 1), e(1, 0, 0)},
      {e(0, 0, 1), e(0, 1, 0), e(0, 0, 0)},
  };
  spec.identities = {e(1, 0, 0)};
  try {
    Ringoid::build(std::move(spec));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::axiom_violation);
    CHECK(std::string(err.what()).find("associativity") != std::string::npos);
  }
}

TEST_CASE("opposite is an involution; z4 is self-opposite") {
  RingoidPtr z4 = fixture_ringoid("z4");
  CHECK(structurally_equal(*z4->opposite(), *z4));
  RingoidPtr a2 = fixture_ringoid("a2f2");
  RingoidPtr op = a2->opposite();
  ObjId p = *a2->object_by_name("P"), q = *a2->object_by_name("Q");
  CHECK(op->hom(q, p).order() == 2);
  CHECK(op->hom(p, q).order() == 1);
  CHECK(structurally_equal(*op->opposite(), *a2));
}

TEST_CASE("von Neumann regularity matches brute force") {
  auto brute = [](const Ringoid& r) {
    for (ObjId p = 0; p < r.num_objects(); ++p)
      for (ObjId q = 0; q < r.num_objects(); ++q)
        for (const Morph& m : r.morphisms_between(p, q)) {
          bool found = false;
          for (const Morph& s : r.morphisms_between(q, p))
            if (r.compose(m, r.compose(s, m)) == m) found = true;
          if (!found) return false;
        }
    return true;
  };
  for (const char* name : {"z4", "z6", "f2e", "z2xz2", "m2f2", "a2f2", "z2", "z12"}) {
    RingoidPtr r = fixture_ringoid(name);
    CHECK(is_von_neumann_regular(*r).regular == brute(*r));
  }
  VnrResult v6 = is_von_neumann_regular(*fixture_ringoid("z6"));
  CHECK(v6.regular);
  // witness for r = 2 is s = 2 (first in enumeration order)
  for (const auto& [r, s] : v6.witnesses)
    if (r.coeffs == Elem{2}) CHECK(s.coeffs == Elem{2});
  VnrResult v4 = is_von_neumann_regular(*fixture_ringoid("z4"));
  CHECK(!v4.regular);
  REQUIRE(v4.counterexample.has_value());
  CHECK(v4.counterexample->coeffs == Elem{2});
  CHECK(is_von_neumann_regular(*fixture_ringoid("z1")).regular);  // zero ring
}

TEST_CASE("ideal_generated: closure, minimality, examples") {
  RingoidPtr z4 = fixture_ringoid("z4");
  LeftIdeal i1 = ideal_generated(z4, 0, {Morph{0, 0, Elem{2}}});
  CHECK(i1.parts[0].order() == 2);
  CHECK(i1.contains(Morph{0, 0, Elem{2}}));

  RingoidPtr a2 = fixture_ringoid("a2f2");
  ObjId p = *a2->object_by_name("P"), q = *a2->object_by_name("Q");
  Morph arrow = *a2->named_generator("r");
  LeftIdeal i2 = ideal_generated(a2, p, {arrow});
  CHECK(i2.parts[static_cast<std::size_t>(p)].order() == 1);
  CHECK(i2.parts[static_cast<std::size_t>(q)].order() == 2);

  LeftIdeal i3 = ideal_generated(z4, 0, {});
  CHECK(i3.total_order() == 1);

  // regenerating from all part elements gives the same ideal
  std::vector<Morph> elems;
  for (ObjId obj = 0; obj < 1; ++obj)
    for (Int pos = 0; pos < i1.parts[0].order(); ++pos)
      elems.push_back(Morph{0, 0, i1.parts[0].element(static_cast<std::size_t>(pos))});
  CHECK(ideal_generated(z4, 0, elems).same_parts(i1));

  CHECK_THROWS_AS(ideal_generated(a2, q, {arrow}), Error);
}

TEST_CASE("exhaustive bilinearity and associativity on fixture ringoids") {
  for (const char* name : {"z4", "z6", "f2e", "a2f2"}) {
    RingoidPtr r = fixture_ringoid(name);
    for (ObjId p = 0; p < r->num_objects(); ++p)
      for (ObjId q = 0; q < r->num_objects(); ++q)
        for (ObjId s = 0; s < r->num_objects(); ++s)
          for (const Morph& f : r->morphisms_between(p, q))
            for (const Morph& g : r->morphisms_between(q, s)) {
              for (const Morph& h : r->morphisms_between(q, s)) {
                CHECK(r->compose(r->add(g, h), f) ==
                      r->add(r->compose(g, f), r->compose(h, f)));
              }
              for (const Morph& h : r->morphisms_between(p, q)) {
                CHECK(r->compose(g, r->add(f, h)) ==
                      r->add(r->compose(g, f), r->compose(g, h)));
              }
            }
  }
}
