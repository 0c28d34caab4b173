#include "ppcalc/pp_pairs.hpp"

#include <algorithm>
#include <sstream>

#include "ppcalc/error.hpp"
#include "ppcalc/family.hpp"

namespace ppcalc {

namespace {

// Widen a formula on sorts S to the context (before ++ S ++ after), the new
// variables unconstrained.
PpFormula pad_free(const PpFormula& f, const std::vector<ObjId>& before,
                   const std::vector<ObjId>& after) {
  PpFormula g;
  g.side = f.side;
  g.ringoid = f.ringoid;
  g.free_sorts = before;
  g.free_sorts.insert(g.free_sorts.end(), f.free_sorts.begin(), f.free_sorts.end());
  g.free_sorts.insert(g.free_sorts.end(), after.begin(), after.end());
  g.bound_sorts = f.bound_sorts;
  g.rel_sorts = f.rel_sorts;
  const int nb = static_cast<int>(before.size());
  const int na = static_cast<int>(after.size());
  const int n = f.num_free(), m = f.num_bound(), k = f.num_cols();
  g.h.assign(static_cast<std::size_t>(nb + n + na + m), {});
  auto zero_row = [&](ObjId vs) {
    std::vector<Morph> row;
    for (int j = 0; j < k; ++j) {
      ObjId rs = g.rel_sorts[static_cast<std::size_t>(j)];
      row.push_back(g.side == Side::right ? g.ringoid->zero_morph(rs, vs)
                                          : g.ringoid->zero_morph(vs, rs));
    }
    return row;
  };
  int row = 0;
  for (int i = 0; i < nb; ++i) g.h[static_cast<std::size_t>(row++)] = zero_row(before[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) g.h[static_cast<std::size_t>(row++)] = f.h[static_cast<std::size_t>(i)];
  for (int i = 0; i < na; ++i) g.h[static_cast<std::size_t>(row++)] = zero_row(after[static_cast<std::size_t>(i)]);
  for (int i = 0; i < m; ++i) g.h[static_cast<std::size_t>(row++)] = f.h[static_cast<std::size_t>(n + i)];
  g.validate();
  return g;
}

// psi' evaluated at (y - y') on the context (x, y, y').
PpFormula difference_substitution(const PpFormula& psi, const std::vector<ObjId>& x_sorts) {
  const RingoidPtr& r = psi.ringoid;
  const int n = psi.num_free(), m = psi.num_bound(), k = psi.num_cols();
  PpFormula g;
  g.side = psi.side;
  g.ringoid = r;
  g.free_sorts = x_sorts;
  g.free_sorts.insert(g.free_sorts.end(), psi.free_sorts.begin(), psi.free_sorts.end());
  g.free_sorts.insert(g.free_sorts.end(), psi.free_sorts.begin(), psi.free_sorts.end());
  g.bound_sorts = psi.bound_sorts;
  g.rel_sorts = psi.rel_sorts;
  const int nx = static_cast<int>(x_sorts.size());
  g.h.assign(static_cast<std::size_t>(nx + 2 * n + m), {});
  auto zero_row = [&](ObjId vs) {
    std::vector<Morph> row;
    for (int j = 0; j < k; ++j) {
      ObjId rs = g.rel_sorts[static_cast<std::size_t>(j)];
      row.push_back(g.side == Side::right ? r->zero_morph(rs, vs) : r->zero_morph(vs, rs));
    }
    return row;
  };
  int row = 0;
  for (int i = 0; i < nx; ++i) g.h[static_cast<std::size_t>(row++)] = zero_row(x_sorts[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) g.h[static_cast<std::size_t>(row++)] = psi.h[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i) {
    std::vector<Morph> neg_row;
    for (int j = 0; j < k; ++j)
      neg_row.push_back(r->neg(psi.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    g.h[static_cast<std::size_t>(row++)] = std::move(neg_row);
  }
  for (int i = 0; i < m; ++i) g.h[static_cast<std::size_t>(row++)] = psi.h[static_cast<std::size_t>(n + i)];
  g.validate();
  return g;
}

// rho with its target block moved: context (x, y) -> (x, y1, y2), rho applied
// to (x, y_which).
PpFormula rho_on_copy(const PpFormula& rho, int nx, int ny, int which) {
  std::vector<ObjId> y_sorts(rho.free_sorts.begin() + nx, rho.free_sorts.end());
  PpFormula wide = pad_free(rho, {}, y_sorts);  // context (x, y, y')
  if (which == 0) return wide;
  // swap the two y blocks
  std::vector<int> perm;
  for (int i = 0; i < nx; ++i) perm.push_back(i);
  for (int i = 0; i < ny; ++i) perm.push_back(nx + ny + i);
  for (int i = 0; i < ny; ++i) perm.push_back(nx + i);
  return rename_free(wide, perm);
}

}  // namespace

PpPair make_pair(const PpFormula& phi, const PpFormula& psi) {
  phi.validate();
  psi.validate();
  ImpliesResult imp = implies(psi, phi);
  if (!imp.holds)
    fail(Errc::not_a_pair,
         "make_pair: bottom does not imply top (counterexample of order " +
             std::to_string(imp.counterexample.module->order()) + ")");
  return PpPair{phi, psi};
}

PairValue pair_value(const PpPair& p, const ModulePtr& m) {
  PairValue pv{FinAbGroup(), evaluate(p.top, m), evaluate(p.bottom, m), {}, {}, {}};
  pv.mod_bottom = quotient_by(pv.top.prod.group, pv.bottom.sols.gens());
  std::vector<Elem> img_gens;
  for (const Elem& g : pv.top.sols.gens()) img_gens.push_back(pv.mod_bottom.proj.apply(g));
  pv.image_in_quot = Subgroup::generate(pv.mod_bottom.group, std::move(img_gens));
  pv.abs = pv.image_in_quot.abstract_structure();
  pv.group = pv.abs.group;
  return pv;
}

Elem PairValue::to_abstract(const SortedTuple& t) const {
  Elem flat = top.prod.pack(t.entries);
  return abs.express(image_in_quot, mod_bottom.proj.apply(flat));
}

SortedTuple PairValue::rep_of(const Elem& a) const {
  Elem in_quot = abs.incl.apply(a);
  Elem flat = mod_bottom.lift(in_quot);
  // lift lands in the ambient product; adjust into the top subgroup by adding
  // a bottom element if needed (the coset meets top since image came from top)
  if (!top.sols.contains(flat)) {
    for (Int pos = 0; pos < bottom.sols.order(); ++pos) {
      Elem cand = top.prod.group.add(flat, bottom.sols.element(static_cast<std::size_t>(pos)));
      if (top.sols.contains(cand)) {
        flat = std::move(cand);
        break;
      }
    }
  }
  if (!top.sols.contains(flat)) fail(Errc::internal, "pair value rep: no representative in top");
  SortedTuple t;
  t.sorts = top.sorts;
  t.entries = top.prod.unpack(flat);
  return t;
}

MorphismCheck check_morphism(const PpFormula& rho, const PpPair& source, const PpPair& target) {
  MorphismCheck out;
  rho.validate();
  const int nx = source.top.num_free();
  const int ny = target.top.num_free();
  std::vector<ObjId> want = source.top.free_sorts;
  want.insert(want.end(), target.top.free_sorts.begin(), target.top.free_sorts.end());
  if (rho.free_sorts != want || rho.side != source.top.side)
    fail(Errc::sort_mismatch, "check_morphism: rho context must be source frees ++ target frees");

  const std::vector<ObjId>& xs = source.top.free_sorts;
  const std::vector<ObjId>& ys = target.top.free_sorts;

  PpFormula phi_x = pad_free(source.top, {}, ys);
  PpFormula psi_x = pad_free(source.bottom, {}, ys);
  PpFormula phi_y = pad_free(target.top, xs, {});
  PpFormula psi_y = pad_free(target.bottom, xs, {});

  // (1) rho & phi -> phi'
  {
    ImpliesResult r1 = implies(conj(rho, phi_x), phi_y);
    if (!r1.holds) {
      out.failed_condition = 1;
      out.counterexample = r1.counterexample;
      return out;
    }
  }
  // (2) rho & psi -> psi'
  {
    ImpliesResult r2 = implies(conj(rho, psi_x), psi_y);
    if (!r2.holds) {
      out.failed_condition = 2;
      out.counterexample = r2.counterexample;
      return out;
    }
  }
  // (3) totality: phi -> exists y (rho & phi')
  {
    std::vector<bool> drop(static_cast<std::size_t>(nx + ny), false);
    for (int i = 0; i < ny; ++i) drop[static_cast<std::size_t>(nx + i)] = true;
    ImpliesResult r3 = implies(source.top, exists_project(conj(rho, phi_y), drop));
    if (!r3.holds) {
      out.failed_condition = 3;
      out.counterexample = r3.counterexample;
      return out;
    }
  }
  // (4) single-valued mod psi': rho(x,y1) & rho(x,y2) -> psi'(y1 - y2)
  {
    PpFormula r1 = rho_on_copy(rho, nx, ny, 0);
    PpFormula r2 = rho_on_copy(rho, nx, ny, 1);
    PpFormula lhs = conj(r1, r2);
    PpFormula rhs = difference_substitution(target.bottom, xs);
    ImpliesResult r4 = implies(lhs, rhs);
    if (!r4.holds) {
      out.failed_condition = 4;
      out.counterexample = r4.counterexample;
      return out;
    }
  }
  out.ok = true;
  return out;
}

PpMorphism make_morphism(const PpFormula& rho, const PpPair& source, const PpPair& target) {
  MorphismCheck c = check_morphism(rho, source, target);
  if (!c.ok)
    fail(Errc::rejected_morphism,
         "pp morphism rejected: condition " + std::to_string(c.failed_condition) + " fails");
  return PpMorphism{source, target, rho};
}

bool morphism_plausible_on(const PpFormula& rho, const PpPair& source, const PpPair& target,
                           const ModulePtr& m) {
  // necessary conditions checked concretely on one module
  EvaluatedSet erel = evaluate(rho, m);
  EvaluatedSet etop = evaluate(source.top, m);
  EvaluatedSet ebot = evaluate(source.bottom, m);
  EvaluatedSet ttop = evaluate(target.top, m);
  EvaluatedSet tbot = evaluate(target.bottom, m);
  const int nx = source.top.num_free();
  const int xrank = etop.prod.group.rank();

  // totality and (1),(2) on m
  std::vector<bool> has_partner(static_cast<std::size_t>(etop.sols.order()), false);
  for (Int pos = 0; pos < erel.sols.order(); ++pos) {
    Elem joint = erel.sols.element(static_cast<std::size_t>(pos));
    Elem x(joint.begin(), joint.begin() + xrank);
    Elem y(joint.begin() + xrank, joint.end());
    bool x_top = etop.sols.contains(x);
    if (x_top) {
      if (!ttop.sols.contains(y)) return false;  // (1)
      auto it = std::lower_bound(etop.sols.elem_indices().begin(), etop.sols.elem_indices().end(),
                                 etop.prod.group.index_of(x));
      has_partner[static_cast<std::size_t>(it - etop.sols.elem_indices().begin())] = true;
    }
    if (ebot.sols.contains(x) && !tbot.sols.contains(y)) return false;  // (2)
  }
  for (std::size_t i = 0; i < has_partner.size(); ++i)
    if (!has_partner[i]) return false;  // (3)
  (void)nx;
  return true;
}

KernelCokernelImage kernel_cokernel_image(const PpMorphism& m) {
  const std::vector<ObjId>& xs = m.source.top.free_sorts;
  const std::vector<ObjId>& ys = m.target.top.free_sorts;
  const int nx = static_cast<int>(xs.size());
  const int ny = static_cast<int>(ys.size());

  PpFormula psi_y = pad_free(m.target.bottom, xs, {});
  PpFormula phi_x = pad_free(m.source.top, {}, ys);

  std::vector<bool> drop_y(static_cast<std::size_t>(nx + ny), false);
  for (int i = 0; i < ny; ++i) drop_y[static_cast<std::size_t>(nx + i)] = true;
  std::vector<bool> drop_x(static_cast<std::size_t>(nx + ny), false);
  for (int i = 0; i < nx; ++i) drop_x[static_cast<std::size_t>(i)] = true;

  KernelCokernelImage out;
  PpFormula kernel_top = conj(m.source.top, exists_project(conj(m.rho, psi_y), drop_y));
  out.kernel = make_pair(kernel_top, m.source.bottom);

  PpFormula image_top = sum_formula(m.target.bottom, exists_project(conj(m.rho, phi_x), drop_x));
  out.image = make_pair(image_top, m.target.bottom);
  out.cokernel = make_pair(m.target.top, image_top);

  // inclusion kernel -> source via y = x, projection target -> cokernel via y = x
  auto equality_rho = [&](const std::vector<ObjId>& sorts) {
    const RingoidPtr& r = m.rho.ringoid;
    PpFormula f = trivial_formula(r, m.rho.side, sorts);
    f.free_sorts.insert(f.free_sorts.end(), sorts.begin(), sorts.end());
    f.h.assign(2 * sorts.size(), {});
    f.rel_sorts = sorts;
    const int n = static_cast<int>(sorts.size());
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < n; ++j) {
        ObjId vs = f.var_sort(i);
        ObjId rs = sorts[static_cast<std::size_t>(j)];
        Morph e = f.side == Side::right ? r->zero_morph(rs, vs) : r->zero_morph(vs, rs);
        if (i == j) e = r->identity(rs);
        if (i == n + j) e = r->neg(r->identity(rs));
        f.h[static_cast<std::size_t>(i)].push_back(e);
      }
    f.validate();
    return f;
  };
  out.kernel_incl = make_morphism(equality_rho(xs), out.kernel, m.source);
  out.cokernel_proj = make_morphism(equality_rho(ys), m.target, out.cokernel);
  return out;
}

GroupHom morphism_on_module(const PpMorphism& m, const ModulePtr& mod) {
  PairValue src = pair_value(m.source, mod);
  PairValue tgt = pair_value(m.target, mod);
  const std::vector<ObjId>& xs = m.source.top.free_sorts;
  PpFormula graph = conj(m.rho, pad_free(m.target.top, xs, {}));
  EvaluatedSet egraph = evaluate(graph, mod);
  const int xrank = src.top.prod.group.rank();

  GroupHom h;
  h.src = src.group;
  h.tgt = tgt.group;
  for (int i = 0; i < src.group.rank(); ++i) {
    Elem a = src.group.zero();
    a[static_cast<std::size_t>(i)] = 1;
    SortedTuple xt = src.rep_of(a);
    Elem xflat = src.top.prod.pack(xt.entries);
    // find any partner y with (x, y) in graph
    bool found = false;
    Elem y;
    for (Int pos = 0; pos < egraph.sols.order() && !found; ++pos) {
      Elem joint = egraph.sols.element(static_cast<std::size_t>(pos));
      if (std::equal(joint.begin(), joint.begin() + xrank, xflat.begin(), xflat.end())) {
        y.assign(joint.begin() + xrank, joint.end());
        found = true;
      }
    }
    if (!found) fail(Errc::internal, "morphism_on_module: totality failed on module");
    SortedTuple yt;
    yt.sorts = m.target.top.free_sorts;
    yt.entries = tgt.top.prod.unpack(y);
    h.img.push_back(tgt.to_abstract(yt));
  }
  return h;
}

bool is_closed_on(const PpPair& p, const ModulePtr& m) {
  return evaluate(p.top, m).order() == evaluate(p.bottom, m).order();
}

bool serre_membership(const PpPair& p, const std::vector<ModulePtr>& generators) {
  if (generators.empty()) fail(Errc::bad_input, "serre_membership: need generators");
  for (const ModulePtr& m : generators)
    if (!is_closed_on(p, m)) return false;
  // spot-check closure under double sums
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i; j < generators.size(); ++j)
      if (!is_closed_on(p, direct_sum(generators[i], generators[j]))) return false;
  return true;
}

LocalizedIsoResult localized_iso(const PpPair& p, const PpPair& q,
                                 const std::vector<ModulePtr>& generators,
                                 const SearchBounds& bounds) {
  LocalizedIsoResult out;
  // sound non-isomorphism certificate: orders differ at a generator
  for (const ModulePtr& m : generators) {
    Int po = pair_value(p, m).order();
    Int qo = pair_value(q, m).order();
    if (po != qo) {
      out.kind = LocalizedIsoResult::Kind::not_iso;
      std::ostringstream os;
      os << "values differ on " << m->name() << ": " << po << " vs " << qo;
      out.certificate = os.str();
      return out;
    }
  }

  std::vector<ObjId> joint = p.top.free_sorts;
  joint.insert(joint.end(), q.top.free_sorts.begin(), q.top.free_sorts.end());
  std::optional<PpMorphism> found;
  enumerate_formulas(p.top.ringoid, p.top.side, joint, bounds.max_bound_vars, bounds.max_cols,
                     bounds.raw_cap, [&](PpFormula&& rho) {
                       for (const ModulePtr& m : generators)
                         if (!morphism_plausible_on(rho, p, q, m)) return true;
                       MorphismCheck c = check_morphism(rho, p, q);
                       if (!c.ok) return true;
                       PpMorphism cand{p, q, rho};
                       KernelCokernelImage kci = kernel_cokernel_image(cand);
                       if (!serre_membership(kci.kernel, generators)) return true;
                       if (!serre_membership(kci.cokernel, generators)) return true;
                       found = std::move(cand);
                       return false;  // stop
                     });
  if (found) {
    out.kind = LocalizedIsoResult::Kind::iso;
    out.iso = std::move(found);
  }
  return out;
}

ModulePtr eval_pair_to_module(const PpPair& p) {
  if (p.top.side != Side::left) fail(Errc::side_mismatch, "eval_pair_to_module: left pair required");
  if (p.top.num_free() != 1) fail(Errc::arity_error, "eval_pair_to_module: one free variable");
  const RingoidPtr& r = p.top.ringoid;
  const int n = r->num_objects();

  std::vector<PairValue> values;
  for (ObjId obj = 0; obj < n; ++obj) values.push_back(pair_value(p, representable(r, obj, Side::left)));

  std::vector<FinAbGroup> fibers;
  for (const auto& v : values) fibers.push_back(v.group);

  Module::Actions actions(static_cast<std::size_t>(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      auto& out = actions[static_cast<std::size_t>(a) * n + b];
      const FinAbGroup& hg = r->hom(a, b);
      for (int g = 0; g < hg.rank(); ++g) {
        Morph mg = r->zero_morph(a, b);
        mg.coeffs[static_cast<std::size_t>(g)] = 1;
        // right action of mg: fiber(b) -> fiber(a), induced by the left-module
        // map (b,-) -> (a,-), t |-> t o mg
        GroupHom h;
        h.src = values[static_cast<std::size_t>(b)].group;
        h.tgt = values[static_cast<std::size_t>(a)].group;
        for (int i = 0; i < h.src.rank(); ++i) {
          Elem e = h.src.zero();
          e[static_cast<std::size_t>(i)] = 1;
          SortedTuple t = values[static_cast<std::size_t>(b)].rep_of(e);
          SortedTuple mapped;
          mapped.sorts = t.sorts;
          for (std::size_t c = 0; c < t.size(); ++c) {
            Morph elem{b, t.sorts[c], t.entries[c]};
            mapped.entries.push_back(r->compose(elem, mg).coeffs);
          }
          h.img.push_back(values[static_cast<std::size_t>(a)].to_abstract(mapped));
        }
        out.push_back(std::move(h));
      }
    }
  return Module::build(r, Side::right, std::move(fibers), std::move(actions),
                       "eval(" + std::string("pair") + ")");
}

PpPair home_sort_pair(const RingoidPtr& r, Side side, std::vector<ObjId> sorts) {
  PpFormula top = trivial_formula(r, side, sorts);
  PpFormula bottom = zero_formula(r, side, std::move(sorts));
  return PpPair{top, bottom};
}

}  // namespace ppcalc
