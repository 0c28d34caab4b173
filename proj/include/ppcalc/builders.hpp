#pragma once

#include <string>
#include <vector>

#include "ppcalc/ringoid.hpp"

namespace ppcalc {

// Z/n as a one-object ringoid.
RingoidPtr make_zn(Int n, const std::string& name = "");

// F_p[X]/(f) with f monic given by its lower coefficients (f = X^d + c_{d-1}X^{d-1}+...+c_0).
RingoidPtr make_poly_quotient(Int p, const std::vector<Int>& lower_coeffs,
                              const std::string& var_name = "x", const std::string& name = "");

// Product of two one-object ringoids, as a one-object ringoid.
RingoidPtr make_ring_product(const RingoidPtr& a, const RingoidPtr& b, const std::string& name = "");

// n x n matrix ring over a one-object ringoid.
RingoidPtr make_matrix_ring(const RingoidPtr& base, int n, const std::string& name = "");

// Path category of a quiver over F_p with zero relations (forbidden paths).
struct QuiverSpec {
  Int p = 2;
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name;
    std::string from, to;
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::string>> zero_relations;  // each a path, first-applied arrow first
  std::string name;
};
RingoidPtr make_path_category(const QuiverSpec& spec);

}  // namespace ppcalc
