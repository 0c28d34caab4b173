#include "ppcalc/duality.hpp"

#include "ppcalc/error.hpp"

namespace ppcalc {

PpFormula dual(const PpFormula& f) {
  f.validate();
  const RingoidPtr& r = f.ringoid;
  const int n = f.num_free(), m = f.num_bound(), k = f.num_cols();
  PpFormula d;
  d.side = opposite_side(f.side);
  d.ringoid = r;
  d.free_sorts = f.free_sorts;
  d.bound_sorts = f.rel_sorts;  // z variables, one per original equation
  d.rel_sorts = f.free_sorts;
  d.rel_sorts.insert(d.rel_sorts.end(), f.bound_sorts.begin(), f.bound_sorts.end());

  d.h.assign(static_cast<std::size_t>(n + k), {});
  for (int i = 0; i < n + k; ++i) {
    std::vector<Morph> row;
    for (int j = 0; j < n + m; ++j) {
      if (i < n) {
        // identity block on the free variables, zero against the old bound block
        if (j < n && i == j) {
          row.push_back(r->identity(f.free_sorts[static_cast<std::size_t>(i)]));
        } else {
          ObjId vs = d.free_sorts[static_cast<std::size_t>(i)];
          ObjId rs = d.rel_sorts[static_cast<std::size_t>(j)];
          row.push_back(d.side == Side::right ? r->zero_morph(rs, vs) : r->zero_morph(vs, rs));
        }
      } else {
        // transposed original matrix: entry (z_{col i-n}, equation of variable j)
        row.push_back(f.h[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - n)]);
      }
    }
    d.h[static_cast<std::size_t>(i)] = std::move(row);
  }
  d.validate();
  return d;
}

HerzogResult herzog_check(const SortedTuple& r, const ModulePtr& m, const SortedTuple& s,
                          const ModulePtr& n) {
  return herzog_check(tensor(m, n), r, s);
}

HerzogResult herzog_check(const TensorProduct& t, const SortedTuple& r, const SortedTuple& s) {
  const ModulePtr& m = t.m_right;
  const ModulePtr& n = t.n_left;
  if (r.sorts != s.sorts) fail(Errc::sort_mismatch, "herzog: tuples must have matching sorts");
  if (!tuple_in_module(m, r) || !tuple_in_module(n, s))
    fail(Errc::sort_mismatch, "herzog: tuples not from the given modules");

  HerzogResult res;
  res.tensor_group = t.group;
  res.tensor_class = t.class_of(r, s);
  res.tensor_zero = t.group.is_zero(res.tensor_class);
  if (!res.tensor_zero) return res;

  res.witness = principal_type(r, m);
  PpFormula dphi = dual(res.witness);
  res.memberships_verified =
      evaluate(res.witness, m).contains(r) && evaluate(dphi, n).contains(s);
  return res;
}

}  // namespace ppcalc
