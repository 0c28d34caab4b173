#include <random>

#include "doctest.h"
#include "ppcalc/int_mat.hpp"

using namespace ppcalc;

namespace {

IntMat random_matrix(std::mt19937& rng, int rows, int cols, Int lo, Int hi) {
  IntMat m(rows, cols);
  std::uniform_int_distribution<Int> d(lo, hi);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

bool is_diagonal_chain(const IntMat& d) {
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j)
      if (i != j && d.at(i, j) != 0) return false;
  int n = d.rows < d.cols ? d.rows : d.cols;
  for (int i = 0; i + 1 < n; ++i) {
    Int a = d.at(i, i), b = d.at(i + 1, i + 1);
    if (a < 0 || b < 0) return false;
    if (a == 0 && b != 0) return false;
    if (a != 0 && b % a != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form: transforms multiply back") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5);
    int c = 1 + static_cast<int>(rng() % 5);
    IntMat a = random_matrix(rng, r, c, -9, 9);
    SmithResult s = smith_normal_form(a);
    CHECK(is_diagonal_chain(s.d));
    IntMat uav = s.u.mul(a).mul(s.v);
    CHECK(uav.a == s.d.a);
    // inverses
    IntMat uui = s.u.mul(s.uinv);
    IntMat vvi = s.v.mul(s.vinv);
    CHECK(uui.a == IntMat::identity(r).a);
    CHECK(vvi.a == IntMat::identity(c).a);
  }
}

TEST_CASE("left kernel: exact vs brute force over small boxes") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int r = 1 + static_cast<int>(rng() % 3);
    int c = 1 + static_cast<int>(rng() % 3);
    IntMat a = random_matrix(rng, r, c, -3, 3);
    auto basis = left_kernel(a);
    // every basis vector is in the kernel
    for (const auto& x : basis)
      for (int j = 0; j < c; ++j) {
        Int acc = 0;
        for (int i = 0; i < r; ++i) acc += x[static_cast<std::size_t>(i)] * a.at(i, j);
        CHECK(acc == 0);
      }
    // brute force: every small kernel vector is an integer combination of the
    // basis (via solve on the stacked basis matrix)
    IntMat bmat(static_cast<int>(basis.size()), r);
    for (int i = 0; i < bmat.rows; ++i)
      for (int j = 0; j < r; ++j) bmat.at(i, j) = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::vector<Int> x(static_cast<std::size_t>(r), -2);
    while (true) {
      bool in_kernel = true;
      for (int j = 0; j < c && in_kernel; ++j) {
        Int acc = 0;
        for (int i = 0; i < r; ++i) acc += x[static_cast<std::size_t>(i)] * a.at(i, j);
        in_kernel = acc == 0;
      }
      if (in_kernel) CHECK(solve_left(bmat, x).has_value());
      int i = 0;
      while (i < r && x[static_cast<std::size_t>(i)] == 2) x[static_cast<std::size_t>(i++)] = -2;
      if (i == r) break;
      ++x[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("solve_left finds solutions exactly when they exist") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMat a = random_matrix(rng, r, c, -4, 4);
    std::vector<Int> x0;
    std::uniform_int_distribution<Int> d(-4, 4);
    for (int i = 0; i < r; ++i) x0.push_back(d(rng));
    std::vector<Int> b(static_cast<std::size_t>(c), 0);
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i) b[static_cast<std::size_t>(j)] += x0[static_cast<std::size_t>(i)] * a.at(i, j);
    auto sol = solve_left(a, b);
    REQUIRE(sol.has_value());
    for (int j = 0; j < c; ++j) {
      Int acc = 0;
      for (int i = 0; i < r; ++i) acc += (*sol)[static_cast<std::size_t>(i)] * a.at(i, j);
      CHECK(acc == b[static_cast<std::size_t>(j)]);
    }
  }
}
