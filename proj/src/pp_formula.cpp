#include "ppcalc/pp_formula.hpp"

#include <algorithm>

#include "ppcalc/error.hpp"

namespace ppcalc {

namespace {
constexpr Int kEnumLimit = 1 << 12;

void check_module_compat(const PpFormula& f, const ModulePtr& m) {
  if (f.side != m->side()) fail(Errc::side_mismatch, "formula/module side mismatch");
  if (f.ringoid != m->ringoid() && !structurally_equal(*f.ringoid, *m->ringoid()))
    fail(Errc::sort_mismatch, "formula/module ringoid mismatch");
}

Morph zero_entry(const PpFormula& f, int row, int col) {
  ObjId vs = f.var_sort(row);
  ObjId rs = f.rel_sorts[static_cast<std::size_t>(col)];
  return f.side == Side::right ? f.ringoid->zero_morph(rs, vs) : f.ringoid->zero_morph(vs, rs);
}
}  // namespace

void PpFormula::validate() const {
  if (!ringoid) fail(Errc::bad_input, "formula without ringoid");
  if (num_free() < 1) fail(Errc::arity_error, "formula needs at least one free variable");
  if (static_cast<int>(h.size()) != num_free() + num_bound())
    fail(Errc::sort_mismatch, "formula matrix row count");
  for (int i = 0; i < num_free() + num_bound(); ++i) {
    if (static_cast<int>(h[static_cast<std::size_t>(i)].size()) != num_cols())
      fail(Errc::sort_mismatch, "formula matrix column count");
    for (int j = 0; j < num_cols(); ++j) {
      const Morph& e = h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ObjId want_dom = side == Side::right ? rel_sorts[static_cast<std::size_t>(j)] : var_sort(i);
      ObjId want_cod = side == Side::right ? var_sort(i) : rel_sorts[static_cast<std::size_t>(j)];
      if (e.dom != want_dom || e.cod != want_cod)
        fail(Errc::sort_mismatch, "formula entry sorts do not match its row/column");
      if (static_cast<int>(e.coeffs.size()) != ringoid->hom(e.dom, e.cod).rank())
        fail(Errc::sort_mismatch, "formula entry has wrong coefficient length");
    }
  }
}

PpFormula trivial_formula(const RingoidPtr& r, Side side, std::vector<ObjId> sorts) {
  PpFormula f;
  f.side = side;
  f.ringoid = r;
  f.free_sorts = std::move(sorts);
  f.h.assign(f.free_sorts.size(), {});
  return f;
}

PpFormula zero_formula(const RingoidPtr& r, Side side, std::vector<ObjId> sorts) {
  PpFormula f = trivial_formula(r, side, std::move(sorts));
  f.rel_sorts = f.free_sorts;
  for (int i = 0; i < f.num_free(); ++i) {
    std::vector<Morph> row;
    for (int j = 0; j < f.num_free(); ++j)
      row.push_back(i == j ? r->identity(f.free_sorts[static_cast<std::size_t>(i)])
                           : zero_entry(f, i, j));
    f.h[static_cast<std::size_t>(i)] = std::move(row);
  }
  return f;
}

PpFormula annihilator_formula(const RingoidPtr& r, Side side, ObjId sort,
                              const std::vector<Morph>& gens) {
  PpFormula f = trivial_formula(r, side, {sort});
  for (const Morph& g : gens) {
    // right: x of sort P, x*g = 0 needs g: R -> P, equation sort R = g.dom
    ObjId rs = side == Side::right ? g.dom : g.cod;
    ObjId vs = side == Side::right ? g.cod : g.dom;
    if (vs != sort) fail(Errc::sort_mismatch, "annihilator generator sort");
    f.rel_sorts.push_back(rs);
    f.h[0].push_back(g);
  }
  return f;
}

PpFormula conj(const PpFormula& a, const PpFormula& b) {
  if (!a.same_signature(b) || a.ringoid != b.ringoid)
    fail(Errc::sort_mismatch, "conj: signature mismatch");
  PpFormula f;
  f.side = a.side;
  f.ringoid = a.ringoid;
  f.free_sorts = a.free_sorts;
  f.bound_sorts = a.bound_sorts;
  f.bound_sorts.insert(f.bound_sorts.end(), b.bound_sorts.begin(), b.bound_sorts.end());
  f.rel_sorts = a.rel_sorts;
  f.rel_sorts.insert(f.rel_sorts.end(), b.rel_sorts.begin(), b.rel_sorts.end());
  const int n = a.num_free(), ma = a.num_bound(), mb = b.num_bound();
  const int ka = a.num_cols(), kb = b.num_cols();
  f.h.assign(static_cast<std::size_t>(n + ma + mb), {});
  for (int i = 0; i < n + ma + mb; ++i) {
    std::vector<Morph> row;
    for (int j = 0; j < ka + kb; ++j) {
      bool in_a = j < ka;
      if (i < n) {
        row.push_back(in_a ? a.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                           : b.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - ka)]);
      } else if (i < n + ma) {
        row.push_back(in_a ? a.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                           : f.ringoid->zero_morph(0, 0));
      } else {
        row.push_back(in_a ? f.ringoid->zero_morph(0, 0)
                           : b.h[static_cast<std::size_t>(i - ma)][static_cast<std::size_t>(j - ka)]);
      }
    }
    f.h[static_cast<std::size_t>(i)] = std::move(row);
  }
  // fix the zero placeholders to the correct hom groups
  for (int i = 0; i < n + ma + mb; ++i)
    for (int j = 0; j < ka + kb; ++j) {
      Morph& e = f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ObjId want_dom = f.side == Side::right ? f.rel_sorts[static_cast<std::size_t>(j)] : f.var_sort(i);
      ObjId want_cod = f.side == Side::right ? f.var_sort(i) : f.rel_sorts[static_cast<std::size_t>(j)];
      if (e.dom != want_dom || e.cod != want_cod) e = zero_entry(f, i, j);
    }
  f.validate();
  return f;
}

PpFormula sum_formula(const PpFormula& a, const PpFormula& b) {
  if (!a.same_signature(b) || a.ringoid != b.ringoid)
    fail(Errc::sort_mismatch, "sum: signature mismatch");
  const RingoidPtr& r = a.ringoid;
  const int n = a.num_free(), ma = a.num_bound(), mb = b.num_bound();
  const int ka = a.num_cols(), kb = b.num_cols();
  PpFormula f;
  f.side = a.side;
  f.ringoid = r;
  f.free_sorts = a.free_sorts;
  // bound: u (n), v (n), a.bound, b.bound
  f.bound_sorts = a.free_sorts;
  f.bound_sorts.insert(f.bound_sorts.end(), a.free_sorts.begin(), a.free_sorts.end());
  f.bound_sorts.insert(f.bound_sorts.end(), a.bound_sorts.begin(), a.bound_sorts.end());
  f.bound_sorts.insert(f.bound_sorts.end(), b.bound_sorts.begin(), b.bound_sorts.end());
  f.rel_sorts = a.free_sorts;  // x - u - v = 0
  f.rel_sorts.insert(f.rel_sorts.end(), a.rel_sorts.begin(), a.rel_sorts.end());
  f.rel_sorts.insert(f.rel_sorts.end(), b.rel_sorts.begin(), b.rel_sorts.end());
  const int rows = n + n + n + ma + mb;
  const int cols = n + ka + kb;
  f.h.assign(static_cast<std::size_t>(rows), {});
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) f.h[static_cast<std::size_t>(i)].push_back(Morph{-1, -1, {}});
  auto set_zero_defaults = [&]() {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Morph& e = f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (e.dom < 0) e = zero_entry(f, i, j);
      }
  };
  for (int i = 0; i < n; ++i) {
    ObjId p = a.free_sorts[static_cast<std::size_t>(i)];
    f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = r->identity(p);              // x_i
    f.h[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i)] = r->neg(r->identity(p));  // -u_i
    f.h[static_cast<std::size_t>(2 * n + i)][static_cast<std::size_t>(i)] = r->neg(r->identity(p));  // -v_i
  }
  for (int j = 0; j < ka; ++j) {
    for (int i = 0; i < n; ++i)
      f.h[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(n + j)] =
          a.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < ma; ++i)
      f.h[static_cast<std::size_t>(3 * n + i)][static_cast<std::size_t>(n + j)] =
          a.h[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(j)];
  }
  for (int j = 0; j < kb; ++j) {
    for (int i = 0; i < n; ++i)
      f.h[static_cast<std::size_t>(2 * n + i)][static_cast<std::size_t>(n + ka + j)] =
          b.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < mb; ++i)
      f.h[static_cast<std::size_t>(3 * n + ma + i)][static_cast<std::size_t>(n + ka + j)] =
          b.h[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(j)];
  }
  set_zero_defaults();
  f.validate();
  return f;
}

PpFormula exists_project(const PpFormula& f, const std::vector<bool>& drop) {
  if (static_cast<int>(drop.size()) != f.num_free())
    fail(Errc::arity_error, "exists_project: drop mask size");
  PpFormula g;
  g.side = f.side;
  g.ringoid = f.ringoid;
  g.rel_sorts = f.rel_sorts;
  std::vector<int> kept_rows, dropped_rows;
  for (int i = 0; i < f.num_free(); ++i) {
    if (drop[static_cast<std::size_t>(i)]) {
      dropped_rows.push_back(i);
    } else {
      kept_rows.push_back(i);
      g.free_sorts.push_back(f.free_sorts[static_cast<std::size_t>(i)]);
    }
  }
  if (g.free_sorts.empty()) fail(Errc::arity_error, "exists_project: would drop all free variables");
  for (int i : dropped_rows) g.bound_sorts.push_back(f.free_sorts[static_cast<std::size_t>(i)]);
  g.bound_sorts.insert(g.bound_sorts.end(), f.bound_sorts.begin(), f.bound_sorts.end());
  for (int i : kept_rows) g.h.push_back(f.h[static_cast<std::size_t>(i)]);
  for (int i : dropped_rows) g.h.push_back(f.h[static_cast<std::size_t>(i)]);
  for (int i = 0; i < f.num_bound(); ++i)
    g.h.push_back(f.h[static_cast<std::size_t>(f.num_free() + i)]);
  g.validate();
  return g;
}

PpFormula rename_free(const PpFormula& f, const std::vector<int>& perm) {
  PpFormula g = f;
  for (int i = 0; i < f.num_free(); ++i) {
    g.free_sorts[static_cast<std::size_t>(i)] =
        f.free_sorts[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    g.h[static_cast<std::size_t>(i)] = f.h[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
  }
  g.validate();
  return g;
}

bool EvaluatedSet::contains(const SortedTuple& t) const {
  if (t.sorts != sorts) fail(Errc::sort_mismatch, "tuple sorts do not match evaluation");
  return sols.contains(prod.pack(t.entries));
}

SortedTuple EvaluatedSet::tuple_at(std::size_t pos) const {
  SortedTuple t;
  t.sorts = sorts;
  t.entries = prod.unpack(sols.element(pos));
  return t;
}

EvaluatedSet evaluate(const PpFormula& f, const ModulePtr& m) {
  f.validate();
  check_module_compat(f, m);
  const int n = f.num_free(), tot = n + f.num_bound();

  std::vector<FinAbGroup> var_parts;
  for (int i = 0; i < tot; ++i) var_parts.push_back(m->fiber(f.var_sort(i)));
  ProductGroup vars(var_parts);
  std::vector<FinAbGroup> eqs;
  for (ObjId rs : f.rel_sorts) eqs.push_back(m->fiber(rs));

  std::vector<GroupHom> coeff_homs;
  coeff_homs.reserve(static_cast<std::size_t>(tot) * static_cast<std::size_t>(f.num_cols()));
  for (int i = 0; i < tot; ++i)
    for (int j = 0; j < f.num_cols(); ++j)
      coeff_homs.push_back(m->action(f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  LinearSystem sys;
  sys.vars = &vars;
  sys.eqs = eqs;
  sys.coeff.assign(static_cast<std::size_t>(tot) * eqs.size(), nullptr);
  for (int i = 0; i < tot; ++i)
    for (int j = 0; j < f.num_cols(); ++j)
      sys.coeff[static_cast<std::size_t>(i) * eqs.size() + static_cast<std::size_t>(j)] =
          &coeff_homs[static_cast<std::size_t>(i) * static_cast<std::size_t>(f.num_cols()) +
                      static_cast<std::size_t>(j)];

  std::vector<Elem> all_var_sols = vars.group.order() <= kEnumLimit
                                       ? solve_homogeneous_enum(sys)
                                       : solve_homogeneous_gens(sys);

  // project to the free block
  std::vector<FinAbGroup> free_parts(var_parts.begin(), var_parts.begin() + n);
  ProductGroup free_prod(free_parts);
  const int free_rank = free_prod.group.rank();
  std::vector<Elem> projected;
  for (const Elem& s : all_var_sols)
    projected.push_back(Elem(s.begin(), s.begin() + free_rank));

  EvaluatedSet out{free_prod, Subgroup::generate(free_prod.group, std::move(projected)),
                   f.free_sorts};
  return out;
}

FreeRealization free_realization(const PpFormula& f) {
  f.validate();
  std::vector<ObjId> gen_sorts = f.free_sorts;
  gen_sorts.insert(gen_sorts.end(), f.bound_sorts.begin(), f.bound_sorts.end());
  std::vector<std::vector<Morph>> cols;
  for (int j = 0; j < f.num_cols(); ++j) {
    std::vector<Morph> col;
    for (int i = 0; i < f.num_free() + f.num_bound(); ++i)
      col.push_back(f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    cols.push_back(std::move(col));
  }
  PresentedModule pm = finitely_presented(f.ringoid, f.side, gen_sorts, f.rel_sorts, cols);
  FreeRealization fr;
  fr.module = pm.module;
  fr.point.sorts = f.free_sorts;
  fr.point.entries.assign(pm.generators.entries.begin(),
                          pm.generators.entries.begin() + f.num_free());
  return fr;
}

ImpliesResult implies(const PpFormula& psi, const PpFormula& phi) {
  if (!psi.same_signature(phi)) fail(Errc::sort_mismatch, "implies: signature mismatch");
  FreeRealization fr = free_realization(psi);
  EvaluatedSet ev = evaluate(phi, fr.module);
  ImpliesResult res;
  res.holds = ev.contains(fr.point);
  if (!res.holds) res.counterexample = std::move(fr);
  return res;
}

bool equivalent(const PpFormula& a, const PpFormula& b) {
  return implies(a, b).holds && implies(b, a).holds;
}

PpFormula principal_type(const SortedTuple& a, const ModulePtr& m) {
  if (!tuple_in_module(m, a)) fail(Errc::sort_mismatch, "principal_type: tuple not from module");
  const RingoidPtr& r = m->ringoid();
  const Presentation& pr = m->presentation();
  const int n = static_cast<int>(a.size());
  const int t = static_cast<int>(pr.gen_sorts.size());

  PpFormula f;
  f.side = m->side();
  f.ringoid = r;
  f.free_sorts = a.sorts;
  f.bound_sorts = pr.gen_sorts;
  f.rel_sorts = a.sorts;
  f.rel_sorts.insert(f.rel_sorts.end(), pr.rel_sorts.begin(), pr.rel_sorts.end());
  const int k = f.num_cols();
  f.h.assign(static_cast<std::size_t>(n + t), {});
  for (int i = 0; i < n + t; ++i)
    for (int j = 0; j < k; ++j)
      f.h[static_cast<std::size_t>(i)].push_back(Morph{-1, -1, {}});

  for (int i = 0; i < n; ++i) {
    f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        r->identity(a.sorts[static_cast<std::size_t>(i)]);
    std::vector<Morph> w = m->express(a.sorts[static_cast<std::size_t>(i)], a.entries[static_cast<std::size_t>(i)]);
    for (int u = 0; u < t; ++u)
      f.h[static_cast<std::size_t>(n + u)][static_cast<std::size_t>(i)] = r->neg(w[static_cast<std::size_t>(u)]);
  }
  for (std::size_t v = 0; v < pr.cols.size(); ++v)
    for (int u = 0; u < t; ++u)
      f.h[static_cast<std::size_t>(n + u)][static_cast<std::size_t>(n) + v] = pr.cols[v][static_cast<std::size_t>(u)];
  for (int i = 0; i < n + t; ++i)
    for (int j = 0; j < k; ++j) {
      Morph& e = f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (e.dom < 0) e = zero_entry(f, i, j);
    }
  f.validate();
  return f;
}

LeftIdeal pp_ideal(const PpFormula& phi) {
  phi.validate();
  if (phi.side != Side::right) fail(Errc::side_mismatch, "pp_ideal: right formula required");
  if (phi.num_free() != 1) fail(Errc::arity_error, "pp_ideal: one free variable required");
  const RingoidPtr& r = phi.ringoid;
  const ObjId base = phi.free_sorts[0];
  LeftIdeal ideal;
  ideal.ringoid = r;
  ideal.base = base;
  for (ObjId q = 0; q < r->num_objects(); ++q) {
    EvaluatedSet ev = evaluate(phi, representable(r, q, Side::right));
    // the solution subgroup lives in the fiber at base = hom(base, q)
    std::vector<Elem> gens;
    for (Int pos = 0; pos < ev.sols.order(); ++pos) gens.push_back(ev.sols.element(static_cast<std::size_t>(pos)));
    ideal.parts.push_back(Subgroup::generate(r->hom(base, q), std::move(gens)));
  }
  // greedy finite generator list: elements not generated by the earlier ones
  std::vector<Morph> gens;
  for (ObjId q = 0; q < r->num_objects(); ++q) {
    for (Int pos = 0; pos < ideal.parts[static_cast<std::size_t>(q)].order(); ++pos) {
      Elem e = ideal.parts[static_cast<std::size_t>(q)].element(static_cast<std::size_t>(pos));
      if (r->hom(base, q).is_zero(e)) continue;
      LeftIdeal sofar = ideal_generated(r, base, gens);
      if (sofar.parts[static_cast<std::size_t>(q)].contains(e)) continue;
      gens.push_back(Morph{base, q, e});
    }
  }
  ideal.generators = gens;
  return ideal;
}

Int invariant(const PpFormula& phi, const PpFormula& psi, const ModulePtr& m) {
  ImpliesResult imp = implies(psi, phi);
  if (!imp.holds) fail(Errc::not_a_pair, "invariant: psi does not imply phi");
  Int top = evaluate(phi, m).order();
  Int bot = evaluate(psi, m).order();
  return top / bot;
}

}  // namespace ppcalc
