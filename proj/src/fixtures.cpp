#include "ppcalc/fixtures.hpp"

#include <cctype>

#include "ppcalc/error.hpp"

namespace ppcalc {

namespace {
bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

bool is_fixture_ringoid_name(const std::string& name) {
  if (name == "f2e" || name == "f3e" || name == "z2xz2" || name == "m2f2" || name == "a2f2")
    return true;
  return name.size() > 1 && name[0] == 'z' && all_digits(name.substr(1));
}

RingoidPtr fixture_ringoid(const std::string& name) {
  if (name.size() > 1 && name[0] == 'z' && all_digits(name.substr(1)))
    return make_zn(std::stoll(name.substr(1)), name);
  if (name == "f2e") return make_poly_quotient(2, {0, 0}, "e", "f2e");
  if (name == "f3e") return make_poly_quotient(3, {0, 0}, "e", "f3e");
  if (name == "z2xz2") return make_ring_product(make_zn(2), make_zn(2), "z2xz2");
  if (name == "m2f2") return make_matrix_ring(make_zn(2), 2, "m2f2");
  if (name == "a2f2") {
    QuiverSpec qs;
    qs.p = 2;
    qs.vertices = {"P", "Q"};
    qs.arrows = {{"r", "P", "Q"}};
    qs.name = "a2f2";
    return make_path_category(qs);
  }
  fail(Errc::bad_input, "unknown ringoid fixture: " + name);
}

ModulePtr fixture_module(const std::string& name, const RingoidPtr& r, Side side) {
  if (name == "zero") return zero_module(r, side);
  if (name == "regular") {
    if (r->num_objects() != 1) fail(Errc::bad_input, "regular: one-object ringoid required");
    return representable(r, 0, side);
  }
  if (name == "z2-over-z4") {
    if (r->name() != "z4") fail(Errc::bad_input, "z2-over-z4 lives over z4");
    Morph two{0, 0, Elem{2}};
    auto pm = finitely_presented(r, side, {0}, {0}, {{two}});
    return pm.module;
  }
  if (name == "s1") {
    if (r->name() != "f2e" && r->name() != "f3e") fail(Errc::bad_input, "s1 lives over f2e/f3e");
    Morph eps{0, 0, Elem{0, 1}};
    auto pm = finitely_presented(r, side, {0}, {0}, {{eps}});
    return pm.module;
  }
  if (name == "r-plus-s1") {
    return direct_sum(fixture_module("regular", r, side), fixture_module("s1", r, side));
  }
  fail(Errc::bad_input, "unknown module fixture: " + name);
}

}  // namespace ppcalc
