#pragma once

#include "ppcalc/builders.hpp"
#include "ppcalc/module.hpp"

namespace ppcalc {

// Built-in named ringoids: z<n>, f2e, f3e, z2xz2, m2f2, a2f2.
RingoidPtr fixture_ringoid(const std::string& name);

// Built-in named modules over a fixture ringoid: regular, zero, z2-over-z4,
// s1, r-plus-s1.
ModulePtr fixture_module(const std::string& name, const RingoidPtr& r, Side side);

bool is_fixture_ringoid_name(const std::string& name);

}  // namespace ppcalc
