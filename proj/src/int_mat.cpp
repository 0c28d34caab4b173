#include "ppcalc/int_mat.hpp"

#include <cassert>
#include <cstdlib>

#include "ppcalc/error.hpp"

namespace ppcalc {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::mul(const IntMat& other) const {
  assert(cols == other.rows);
  IntMat r(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      Int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols; ++j) r.at(i, j) += v * other.at(k, j);
    }
  return r;
}

std::vector<Int> IntMat::row(int i) const {
  return std::vector<Int>(a.begin() + static_cast<std::size_t>(i) * cols,
                          a.begin() + static_cast<std::size_t>(i + 1) * cols);
}

namespace {

// Row ops update u on the left and uinv on the right (columns), so that
// u * A_orig * v = A_cur stays true together with u * uinv = I.
struct Transforms {
  IntMat u, uinv, v, vinv;
};

void swap_rows(IntMat& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IntMat& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i -= q * row j
void add_row(IntMat& m, int i, int j, Int q) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}
void add_col(IntMat& m, int i, int j, Int q) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) -= q * m.at(r, j);
}
void negate_row(IntMat& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMat& input) {
  IntMat d = input;
  const int rows = d.rows, cols = d.cols;
  Transforms t{IntMat::identity(rows), IntMat::identity(rows), IntMat::identity(cols),
               IntMat::identity(cols)};

  auto row_op = [&](int i, int j, Int q) {
    add_row(d, i, j, q);
    add_row(t.u, i, j, q);
    // inverse op on uinv columns: col j += q * col i
    for (int r = 0; r < rows; ++r) t.uinv.at(r, j) += q * t.uinv.at(r, i);
  };
  auto col_op = [&](int i, int j, Int q) {
    add_col(d, i, j, q);
    add_col(t.v, i, j, q);
    for (int c = 0; c < cols; ++c) t.vinv.at(j, c) += q * t.vinv.at(i, c);
  };
  auto row_swap = [&](int i, int j) {
    swap_rows(d, i, j);
    swap_rows(t.u, i, j);
    swap_cols(t.uinv, i, j);
  };
  auto col_swap = [&](int i, int j) {
    swap_cols(d, i, j);
    swap_cols(t.v, i, j);
    swap_rows(t.vinv, i, j);
  };
  auto row_neg = [&](int i) {
    negate_row(d, i);
    negate_row(t.u, i);
    for (int r = 0; r < rows; ++r) t.uinv.at(r, i) = -t.uinv.at(r, i);
  };

  const int n = rows < cols ? rows : cols;
  for (int s = 0; s < n; ++s) {
    // find a nonzero pivot of least absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = s; i < rows; ++i)
      for (int j = s; j < cols; ++j) {
        Int v = d.at(i, j) < 0 ? -d.at(i, j) : d.at(i, j);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != s) row_swap(s, pi);
    if (pj != s) col_swap(s, pj);
    if (d.at(s, s) < 0) row_neg(s);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = s + 1; i < rows; ++i) {
        if (d.at(i, s) == 0) continue;
        Int q = d.at(i, s) / d.at(s, s);
        row_op(i, s, q);
        if (d.at(i, s) != 0) {
          row_swap(s, i);
          if (d.at(s, s) < 0) row_neg(s);
          dirty = true;
        }
      }
      for (int j = s + 1; j < cols; ++j) {
        if (d.at(s, j) == 0) continue;
        Int q = d.at(s, j) / d.at(s, s);
        col_op(j, s, q);
        if (d.at(s, j) != 0) {
          col_swap(s, j);
          dirty = true;
        }
      }
    }
    // enforce divisibility: pivot must divide the whole trailing block
    for (int i = s + 1; i < rows && d.at(s, s) != 0; ++i)
      for (int j = s + 1; j < cols; ++j)
        if (d.at(i, j) % d.at(s, s) != 0) {
          row_op(s, i, -1);  // row s += row i, creates entries to re-reduce
          --s;
          i = rows;
          break;
        }
  }

  SmithResult res;
  res.d = std::move(d);
  res.u = std::move(t.u);
  res.uinv = std::move(t.uinv);
  res.v = std::move(t.v);
  res.vinv = std::move(t.vinv);
  return res;
}

std::vector<std::vector<Int>> left_kernel(const IntMat& a) {
  SmithResult s = smith_normal_form(a);
  std::vector<std::vector<Int>> basis;
  for (int i = 0; i < a.rows; ++i) {
    bool pivot = i < s.diag_len() && s.diag(i) != 0;
    if (!pivot) basis.push_back(s.u.row(i));
  }
  return basis;
}

std::optional<std::vector<Int>> solve_left(const IntMat& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.cols) fail(Errc::internal, "solve_left: size mismatch");
  SmithResult s = smith_normal_form(a);
  // x A = b  <=>  z D = b V with x = z U
  std::vector<Int> bv(a.cols, 0);
  for (int j = 0; j < a.cols; ++j)
    for (int k = 0; k < a.cols; ++k) bv[j] += b[k] * s.v.at(k, j);
  std::vector<Int> z(a.rows, 0);
  for (int j = 0; j < a.cols; ++j) {
    Int dj = j < s.diag_len() ? s.diag(j) : 0;
    if (dj == 0) {
      if (bv[j] != 0) return std::nullopt;
    } else {
      if (bv[j] % dj != 0) return std::nullopt;
      if (j < a.rows) z[j] = bv[j] / dj;
    }
  }
  std::vector<Int> x(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.rows; ++k) x[i] += z[k] * s.u.at(k, i);
  return x;
}

}  // namespace ppcalc
