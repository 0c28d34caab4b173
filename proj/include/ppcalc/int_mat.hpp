#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ppcalc {

using Int = std::int64_t;

// Dense integer matrix, row-major. All algebra in this project is exact;
// entries stay far below 2^63 since every modulus is <= 2^16.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMat identity(int n);
  IntMat transposed() const;
  IntMat mul(const IntMat& other) const;
  std::vector<Int> row(int i) const;
};

// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... >= 0.
struct SmithResult {
  IntMat d;
  IntMat u, uinv;
  IntMat v, vinv;
  int diag_len() const { return d.rows < d.cols ? d.rows : d.cols; }
  Int diag(int i) const { return d.at(i, i); }
};

SmithResult smith_normal_form(const IntMat& a);

// Basis of the left kernel { x : x A = 0 }, as rows.
std::vector<std::vector<Int>> left_kernel(const IntMat& a);

// One solution of x A = b (row vector x), if any.
std::optional<std::vector<Int>> solve_left(const IntMat& a, const std::vector<Int>& b);

}  // namespace ppcalc
