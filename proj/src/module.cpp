#include "ppcalc/module.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ppcalc/error.hpp"

namespace ppcalc {

namespace {
constexpr Int kMaxModuleOrder = 1 << 20;
constexpr Int kMaxExhaustivePairs = 1 << 18;
constexpr Int kMaxSubmoduleEnum = 512;
}  // namespace

Int Module::order() const {
  Int o = 1;
  for (const auto& f : fibers_) o *= f.order();
  return o;
}

const GroupHom& Module::gen_action(ObjId p, ObjId q, int gen) const {
  return actions_[pair_index(p, q)][static_cast<std::size_t>(gen)];
}

GroupHom Module::action(const Morph& r) const {
  const FinAbGroup& h = ringoid_->hom(r.dom, r.cod);
  const FinAbGroup& src = side_ == Side::right ? fiber(r.cod) : fiber(r.dom);
  const FinAbGroup& tgt = side_ == Side::right ? fiber(r.dom) : fiber(r.cod);
  GroupHom acc = GroupHom::zero(src, tgt);
  for (int i = 0; i < h.rank(); ++i) {
    Int c = r.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    acc = acc.plus(gen_action(r.dom, r.cod, i).scaled(c));
  }
  return acc;
}

ModulePtr Module::build(RingoidPtr r, Side side, std::vector<FinAbGroup> fibers, Actions actions,
                        std::string name) {
  auto m = std::make_shared<Module>();
  m->ringoid_ = std::move(r);
  m->side_ = side;
  m->fibers_ = std::move(fibers);
  m->actions_ = std::move(actions);
  m->name_ = std::move(name);
  const Ringoid& rg = *m->ringoid_;
  const int n = rg.num_objects();
  if (static_cast<int>(m->fibers_.size()) != n)
    fail(Errc::bad_input, "module: one fiber per object required");
  if (m->order() > kMaxModuleOrder) fail(Errc::size_limit, "module order exceeds limit");
  if (m->actions_.size() != static_cast<std::size_t>(n) * n)
    fail(Errc::bad_input, "module: action table shape");

  for (ObjId p = 0; p < n; ++p)
    for (ObjId q = 0; q < n; ++q) {
      const auto& acts = m->actions_[m->pair_index(p, q)];
      if (static_cast<int>(acts.size()) != rg.hom(p, q).rank())
        fail(Errc::bad_input, "module: one action per hom generator required");
      const FinAbGroup& src = side == Side::right ? m->fiber(q) : m->fiber(p);
      const FinAbGroup& tgt = side == Side::right ? m->fiber(p) : m->fiber(q);
      for (int g = 0; g < static_cast<int>(acts.size()); ++g) {
        const GroupHom& h = acts[static_cast<std::size_t>(g)];
        if (!h.src.same_shape(src) || !h.tgt.same_shape(tgt) || !h.well_defined())
          fail(Errc::functoriality_violation, "action of generator " + std::to_string(g) +
                                                  " of hom(" + rg.object_name(p) + "," +
                                                  rg.object_name(q) + ") is not a valid hom");
        // additivity constraint from the hom group: order(gen) * action = 0
        GroupHom ord = h.scaled(rg.hom(p, q).factor(g));
        if (!ord.equal(GroupHom::zero(src, tgt)))
          fail(Errc::functoriality_violation, "action ignores generator order in hom(" +
                                                  rg.object_name(p) + "," + rg.object_name(q) + ")");
      }
    }

  for (ObjId p = 0; p < n; ++p)
    if (!m->action(rg.identity(p)).is_identity())
      fail(Errc::functoriality_violation,
           "action(1_" + rg.object_name(p) + ") is not the identity");

  // functoriality on composable pairs
  for (ObjId p = 0; p < n; ++p)
    for (ObjId q = 0; q < n; ++q)
      for (ObjId s = 0; s < n; ++s) {
        Int combos = rg.hom(p, q).order() * rg.hom(q, s).order();
        auto check = [&](const Morph& f, const Morph& g) {
          // f: P -> Q, g: Q -> S
          GroupHom lhs = m->action(rg.compose(g, f));
          GroupHom rhs = side == Side::right
                             ? m->action(f).compose_after(m->action(g))
                             : m->action(g).compose_after(m->action(f));
          if (!lhs.equal(rhs))
            fail(Errc::functoriality_violation,
                 "functoriality fails on a pair over (" + rg.object_name(p) + "," +
                     rg.object_name(q) + "," + rg.object_name(s) + ")");
        };
        if (combos <= kMaxExhaustivePairs) {
          for (const Morph& f : rg.morphisms_between(p, q))
            for (const Morph& g : rg.morphisms_between(q, s)) check(f, g);
        } else {
          for (int a = 0; a < rg.hom(p, q).rank(); ++a)
            for (int b = 0; b < rg.hom(q, s).rank(); ++b) {
              Morph f = rg.zero_morph(p, q), g = rg.zero_morph(q, s);
              f.coeffs[static_cast<std::size_t>(a)] = 1;
              g.coeffs[static_cast<std::size_t>(b)] = 1;
              check(f, g);
            }
        }
      }
  return m;
}

// ---- basic constructions ----

ModulePtr representable(const RingoidPtr& r, ObjId p, Side side) {
  const int n = r->num_objects();
  std::vector<FinAbGroup> fibers;
  for (ObjId q = 0; q < n; ++q)
    fibers.push_back(side == Side::right ? r->hom(q, p) : r->hom(p, q));
  Module::Actions actions(static_cast<std::size_t>(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      const FinAbGroup& h = r->hom(a, b);
      auto& out = actions[static_cast<std::size_t>(a) * n + b];
      for (int g = 0; g < h.rank(); ++g) {
        Morph mg = r->zero_morph(a, b);
        mg.coeffs[static_cast<std::size_t>(g)] = 1;
        GroupHom hom;
        if (side == Side::right) {
          // fiber(b) = hom(b, p) -> fiber(a) = hom(a, p): t -> t o mg
          hom.src = r->hom(b, p);
          hom.tgt = r->hom(a, p);
          for (int i = 0; i < hom.src.rank(); ++i) {
            Morph t{b, p, hom.src.zero()};
            t.coeffs[static_cast<std::size_t>(i)] = 1;
            hom.img.push_back(r->compose(t, mg).coeffs);
          }
        } else {
          // fiber(a) = hom(p, a) -> fiber(b) = hom(p, b): t -> mg o t
          hom.src = r->hom(p, a);
          hom.tgt = r->hom(p, b);
          for (int i = 0; i < hom.src.rank(); ++i) {
            Morph t{p, a, hom.src.zero()};
            t.coeffs[static_cast<std::size_t>(i)] = 1;
            hom.img.push_back(r->compose(mg, t).coeffs);
          }
        }
        out.push_back(std::move(hom));
      }
    }
  std::string nm = (side == Side::right ? "(-," : "(") + r->object_name(p) +
                   (side == Side::right ? ")" : ",-)");
  return Module::build(r, side, std::move(fibers), std::move(actions), nm);
}

ModulePtr zero_module(const RingoidPtr& r, Side side) {
  const int n = r->num_objects();
  std::vector<FinAbGroup> fibers(static_cast<std::size_t>(n));
  Module::Actions actions(static_cast<std::size_t>(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      const FinAbGroup& h = r->hom(a, b);
      auto& out = actions[static_cast<std::size_t>(a) * n + b];
      for (int g = 0; g < h.rank(); ++g) out.push_back(GroupHom::zero(FinAbGroup(), FinAbGroup()));
    }
  return Module::build(r, side, std::move(fibers), std::move(actions), "0");
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (a->ringoid() != b->ringoid() && !structurally_equal(*a->ringoid(), *b->ringoid()))
    fail(Errc::side_mismatch, "direct_sum: different ringoids");
  if (a->side() != b->side()) fail(Errc::side_mismatch, "direct_sum: different sides");
  const RingoidPtr& r = a->ringoid();
  const int n = r->num_objects();
  std::vector<FinAbGroup> fibers;
  for (ObjId p = 0; p < n; ++p) fibers.push_back(FinAbGroup::product(a->fiber(p), b->fiber(p)));
  Module::Actions actions(static_cast<std::size_t>(n) * n);
  for (ObjId p = 0; p < n; ++p)
    for (ObjId q = 0; q < n; ++q) {
      auto& out = actions[static_cast<std::size_t>(p) * n + q];
      for (int g = 0; g < r->hom(p, q).rank(); ++g) {
        const GroupHom& ha = a->gen_action(p, q, g);
        const GroupHom& hb = b->gen_action(p, q, g);
        GroupHom hom;
        hom.src = FinAbGroup::product(ha.src, hb.src);
        hom.tgt = FinAbGroup::product(ha.tgt, hb.tgt);
        for (int i = 0; i < ha.src.rank(); ++i) {
          Elem img = ha.img[static_cast<std::size_t>(i)];
          img.insert(img.end(), static_cast<std::size_t>(hb.tgt.rank()), 0);
          hom.img.push_back(std::move(img));
        }
        for (int i = 0; i < hb.src.rank(); ++i) {
          Elem img(static_cast<std::size_t>(ha.tgt.rank()), 0);
          const Elem& bi = hb.img[static_cast<std::size_t>(i)];
          img.insert(img.end(), bi.begin(), bi.end());
          hom.img.push_back(std::move(img));
        }
        out.push_back(std::move(hom));
      }
    }
  std::string nm = a->name() + " + " + b->name();
  return Module::build(r, a->side(), std::move(fibers), std::move(actions), nm);
}

ModuleMap sum_injection(const ModulePtr& sum, const ModulePtr& a, const ModulePtr& b, int which) {
  ModuleMap f;
  f.src = which == 0 ? a : b;
  f.tgt = sum;
  for (ObjId p = 0; p < sum->num_objects(); ++p) {
    GroupHom h;
    h.src = f.src->fiber(p);
    h.tgt = sum->fiber(p);
    const int off = which == 0 ? 0 : a->fiber(p).rank();
    for (int i = 0; i < h.src.rank(); ++i) {
      Elem img = h.tgt.zero();
      img[static_cast<std::size_t>(off + i)] = 1;
      h.img.push_back(std::move(img));
    }
    f.comp.push_back(std::move(h));
  }
  return f;
}

ModuleMap sum_projection(const ModulePtr& sum, const ModulePtr& a, const ModulePtr& b, int which) {
  ModuleMap f;
  f.src = sum;
  f.tgt = which == 0 ? a : b;
  for (ObjId p = 0; p < sum->num_objects(); ++p) {
    GroupHom h;
    h.src = sum->fiber(p);
    h.tgt = f.tgt->fiber(p);
    const int off = which == 0 ? 0 : a->fiber(p).rank();
    const int rk = f.tgt->fiber(p).rank();
    for (int i = 0; i < h.src.rank(); ++i) {
      Elem img = h.tgt.zero();
      if (i >= off && i < off + rk) img[static_cast<std::size_t>(i - off)] = 1;
      h.img.push_back(std::move(img));
    }
    f.comp.push_back(std::move(h));
  }
  return f;
}

// ---- maps ----

SortedTuple ModuleMap::apply_tuple(const SortedTuple& t) const {
  SortedTuple out;
  out.sorts = t.sorts;
  for (std::size_t i = 0; i < t.size(); ++i)
    out.entries.push_back(apply(t.sorts[i], t.entries[i]));
  return out;
}

bool ModuleMap::injective() const {
  for (ObjId p = 0; p < src->num_objects(); ++p)
    if (!comp[static_cast<std::size_t>(p)].kernel_generators().empty()) return false;
  return true;
}

bool ModuleMap::surjective() const {
  for (ObjId p = 0; p < src->num_objects(); ++p) {
    const GroupHom& h = comp[static_cast<std::size_t>(p)];
    Subgroup img = Subgroup::generate(h.tgt, h.img);
    if (img.order() != h.tgt.order()) return false;
  }
  return true;
}

void ModuleMap::check_natural() const {
  const RingoidPtr& r = src->ringoid();
  for (ObjId p = 0; p < r->num_objects(); ++p)
    for (ObjId q = 0; q < r->num_objects(); ++q)
      for (int g = 0; g < r->hom(p, q).rank(); ++g) {
        const GroupHom& as = src->gen_action(p, q, g);
        const GroupHom& at = tgt->gen_action(p, q, g);
        ObjId from = src->side() == Side::right ? q : p;
        ObjId to = src->side() == Side::right ? p : q;
        GroupHom lhs = comp[static_cast<std::size_t>(to)].compose_after(as);
        GroupHom rhs = at.compose_after(comp[static_cast<std::size_t>(from)]);
        if (!lhs.equal(rhs)) fail(Errc::naturality_violation, "map is not natural");
      }
}

ModuleMap ModuleMap::identity(const ModulePtr& m) {
  ModuleMap f;
  f.src = m;
  f.tgt = m;
  for (ObjId p = 0; p < m->num_objects(); ++p) f.comp.push_back(GroupHom::identity(m->fiber(p)));
  return f;
}

ModuleMap compose_maps(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap out;
  out.src = f.src;
  out.tgt = g.tgt;
  for (std::size_t p = 0; p < f.comp.size(); ++p)
    out.comp.push_back(g.comp[p].compose_after(f.comp[p]));
  return out;
}

bool maps_equal(const ModuleMap& a, const ModuleMap& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (std::size_t p = 0; p < a.comp.size(); ++p)
    if (!a.comp[p].equal(b.comp[p])) return false;
  return true;
}

// ---- submodule / quotient ----

std::vector<Subgroup> close_under_action(const ModulePtr& m, std::vector<std::vector<Elem>> gens) {
  const RingoidPtr& r = m->ringoid();
  const int n = m->num_objects();
  gens.resize(static_cast<std::size_t>(n));
  std::vector<Subgroup> parts;
  for (ObjId p = 0; p < n; ++p) parts.push_back(Subgroup::generate(m->fiber(p), gens[static_cast<std::size_t>(p)]));
  bool changed = true;
  while (changed) {
    changed = false;
    for (ObjId p = 0; p < n; ++p)
      for (ObjId q = 0; q < n; ++q)
        for (int g = 0; g < r->hom(p, q).rank(); ++g) {
          const GroupHom& act = m->gen_action(p, q, g);
          ObjId from = m->side() == Side::right ? q : p;
          ObjId to = m->side() == Side::right ? p : q;
          auto& sf = parts[static_cast<std::size_t>(from)];
          auto& st = parts[static_cast<std::size_t>(to)];
          std::vector<Elem> extra;
          for (const Elem& e : sf.gens()) {
            Elem img = act.apply(e);
            if (!st.contains(img)) extra.push_back(std::move(img));
          }
          if (!extra.empty()) {
            std::vector<Elem> ng = st.gens();
            ng.insert(ng.end(), extra.begin(), extra.end());
            st = Subgroup::generate(m->fiber(to), std::move(ng));
            changed = true;
          }
        }
  }
  return parts;
}

SubmodulePart submodule_from_subgroups(const ModulePtr& m, const std::vector<Subgroup>& parts,
                                       std::string name) {
  const RingoidPtr& r = m->ringoid();
  const int n = m->num_objects();
  std::vector<Subgroup::Abstract> abs;
  for (ObjId p = 0; p < n; ++p) abs.push_back(parts[static_cast<std::size_t>(p)].abstract_structure());
  std::vector<FinAbGroup> fibers;
  for (const auto& a : abs) fibers.push_back(a.group);
  Module::Actions actions(static_cast<std::size_t>(n) * n);
  for (ObjId p = 0; p < n; ++p)
    for (ObjId q = 0; q < n; ++q) {
      auto& out = actions[static_cast<std::size_t>(p) * n + q];
      for (int g = 0; g < r->hom(p, q).rank(); ++g) {
        const GroupHom& act = m->gen_action(p, q, g);
        ObjId from = m->side() == Side::right ? q : p;
        ObjId to = m->side() == Side::right ? p : q;
        GroupHom h;
        h.src = abs[static_cast<std::size_t>(from)].group;
        h.tgt = abs[static_cast<std::size_t>(to)].group;
        for (int i = 0; i < h.src.rank(); ++i) {
          Elem amb = abs[static_cast<std::size_t>(from)].incl.img[static_cast<std::size_t>(i)];
          Elem img = act.apply(amb);
          h.img.push_back(abs[static_cast<std::size_t>(to)].express(parts[static_cast<std::size_t>(to)], img));
        }
        out.push_back(std::move(h));
      }
    }
  SubmodulePart sp;
  sp.module = Module::build(r, m->side(), std::move(fibers), std::move(actions),
                            name.empty() ? "sub(" + m->name() + ")" : std::move(name));
  sp.incl.src = sp.module;
  sp.incl.tgt = m;
  for (ObjId p = 0; p < n; ++p) sp.incl.comp.push_back(abs[static_cast<std::size_t>(p)].incl);
  return sp;
}

QuotientPart quotient_by_subgroups(const ModulePtr& m, const std::vector<Subgroup>& parts,
                                   std::string name) {
  const RingoidPtr& r = m->ringoid();
  const int n = m->num_objects();
  std::vector<QuotientWithMaps> qs;
  for (ObjId p = 0; p < n; ++p)
    qs.push_back(quotient_by(m->fiber(p), parts[static_cast<std::size_t>(p)].gens()));
  std::vector<FinAbGroup> fibers;
  for (const auto& q : qs) fibers.push_back(q.group);
  Module::Actions actions(static_cast<std::size_t>(n) * n);
  for (ObjId p = 0; p < n; ++p)
    for (ObjId q = 0; q < n; ++q) {
      auto& out = actions[static_cast<std::size_t>(p) * n + q];
      for (int g = 0; g < r->hom(p, q).rank(); ++g) {
        const GroupHom& act = m->gen_action(p, q, g);
        ObjId from = m->side() == Side::right ? q : p;
        ObjId to = m->side() == Side::right ? p : q;
        GroupHom h;
        h.src = qs[static_cast<std::size_t>(from)].group;
        h.tgt = qs[static_cast<std::size_t>(to)].group;
        for (int i = 0; i < h.src.rank(); ++i) {
          Elem e = h.src.zero();
          e[static_cast<std::size_t>(i)] = 1;
          Elem lifted = qs[static_cast<std::size_t>(from)].lift(e);
          h.img.push_back(qs[static_cast<std::size_t>(to)].proj.apply(act.apply(lifted)));
        }
        out.push_back(std::move(h));
      }
    }
  QuotientPart qp;
  qp.module = Module::build(r, m->side(), std::move(fibers), std::move(actions),
                            name.empty() ? "quot(" + m->name() + ")" : std::move(name));
  qp.proj.src = m;
  qp.proj.tgt = qp.module;
  for (ObjId p = 0; p < n; ++p) qp.proj.comp.push_back(qs[static_cast<std::size_t>(p)].proj);
  return qp;
}

MapFactorization map_factor(const ModuleMap& f) {
  if (f.src->side() != f.tgt->side()) fail(Errc::side_mismatch, "map_factor: side mismatch");
  const int n = f.src->num_objects();
  std::vector<Subgroup> ker, img;
  for (ObjId p = 0; p < n; ++p) {
    const GroupHom& h = f.comp[static_cast<std::size_t>(p)];
    ker.push_back(Subgroup::generate(h.src, h.kernel_generators()));
    img.push_back(Subgroup::generate(h.tgt, h.img));
  }
  MapFactorization out;
  out.kernel = submodule_from_subgroups(f.src, ker, "ker");
  out.image = submodule_from_subgroups(f.tgt, img, "im");
  out.cokernel = quotient_by_subgroups(f.tgt, img, "coker");
  return out;
}

// ---- canonical presentation ----

namespace {
// non-owning alias so presentation() can reuse the ModulePtr-based helpers
ModulePtr alias_ptr(const Module* m) { return ModulePtr(m, [](const Module*) {}); }
}  // namespace

const Presentation& Module::presentation() const {
  if (pres_) return *pres_;
  ModulePtr self = alias_ptr(this);
  const RingoidPtr& r = ringoid_;
  const int n = num_objects();
  auto pres = std::make_shared<Presentation>();

  // greedy generating set: scan fiber elements in canonical order
  std::vector<Subgroup> closed = close_under_action(self, {});
  std::vector<std::vector<Elem>> chosen(static_cast<std::size_t>(n));
  for (ObjId p = 0; p < n; ++p) {
    for (Int idx = 0; idx < fiber(p).order(); ++idx) {
      Elem e = fiber(p).element_at(idx);
      if (closed[static_cast<std::size_t>(p)].contains(e)) continue;
      pres->gen_sorts.push_back(p);
      pres->gen_values.push_back(e);
      chosen[static_cast<std::size_t>(p)].push_back(e);
      closed = close_under_action(self, chosen);
    }
  }
  const int t = static_cast<int>(pres->gen_sorts.size());

  // evaluation homs Theta_P: prod_u hom-group -> fiber(P) and their kernels
  auto eh = std::make_shared<std::vector<GroupHom>>();
  std::vector<ProductGroup> domains;
  for (ObjId p = 0; p < n; ++p) {
    std::vector<FinAbGroup> parts;
    for (int u = 0; u < t; ++u) {
      ObjId su = pres->gen_sorts[static_cast<std::size_t>(u)];
      parts.push_back(side_ == Side::right ? r->hom(p, su) : r->hom(su, p));
    }
    ProductGroup pg(parts);
    GroupHom theta;
    theta.src = pg.group;
    theta.tgt = fiber(p);
    for (int u = 0; u < t; ++u) {
      ObjId su = pres->gen_sorts[static_cast<std::size_t>(u)];
      const FinAbGroup& hg = parts[static_cast<std::size_t>(u)];
      for (int i = 0; i < hg.rank(); ++i) {
        Morph w = side_ == Side::right ? Morph{p, su, hg.zero()} : Morph{su, p, hg.zero()};
        w.coeffs[static_cast<std::size_t>(i)] = 1;
        theta.img.push_back(action(w).apply(pres->gen_values[static_cast<std::size_t>(u)]));
      }
    }
    eh->push_back(std::move(theta));
    domains.push_back(std::move(pg));
  }

  // kernel subfunctor of the free cover F = sum of representables(gen sorts)
  ModulePtr free_cover;
  {
    ModulePtr acc;
    for (int u = 0; u < t; ++u) {
      ModulePtr rep = representable(r, pres->gen_sorts[static_cast<std::size_t>(u)], side_);
      acc = acc ? direct_sum(acc, rep) : rep;
    }
    free_cover = acc ? acc : zero_module(r, side_);
  }
  // fiber of F at P is exactly domains[p].group (same factor order)
  std::vector<Subgroup> kparts;
  for (ObjId p = 0; p < n; ++p)
    kparts.push_back(
        Subgroup::generate(domains[static_cast<std::size_t>(p)].group,
                           (*eh)[static_cast<std::size_t>(p)].kernel_generators()));

  // greedy generators of the kernel submodule
  std::vector<std::vector<Elem>> kchosen(static_cast<std::size_t>(n));
  std::vector<Subgroup> kclosed = close_under_action(free_cover, {});
  for (ObjId p = 0; p < n; ++p) {
    for (Int pos = 0; pos < kparts[static_cast<std::size_t>(p)].order(); ++pos) {
      Elem e = kparts[static_cast<std::size_t>(p)].element(static_cast<std::size_t>(pos));
      if (kclosed[static_cast<std::size_t>(p)].contains(e)) continue;
      pres->rel_sorts.push_back(p);
      std::vector<Morph> col;
      for (int u = 0; u < t; ++u) {
        ObjId su = pres->gen_sorts[static_cast<std::size_t>(u)];
        Elem part = domains[static_cast<std::size_t>(p)].part_of(e, u);
        col.push_back(side_ == Side::right ? Morph{p, su, part} : Morph{su, p, part});
      }
      pres->cols.push_back(std::move(col));
      kchosen[static_cast<std::size_t>(p)].push_back(e);
      kclosed = close_under_action(free_cover, kchosen);
    }
  }

  express_homs_ = eh;
  pres_ = pres;
  return *pres_;
}

std::vector<Morph> Module::express(ObjId p, const Elem& a) const {
  presentation();
  const GroupHom& theta = (*express_homs_)[static_cast<std::size_t>(p)];
  Elem w;
  if (!theta.preimage(fiber(p).reduce(a), w))
    fail(Errc::internal, "express: element not generated (presentation broken)");
  const Presentation& pr = *pres_;
  std::vector<Morph> out;
  int off = 0;
  for (std::size_t u = 0; u < pr.gen_sorts.size(); ++u) {
    ObjId su = pr.gen_sorts[u];
    const FinAbGroup& hg = side_ == Side::right ? ringoid_->hom(p, su) : ringoid_->hom(su, p);
    Elem coeffs(w.begin() + off, w.begin() + off + hg.rank());
    out.push_back(side_ == Side::right ? Morph{p, su, std::move(coeffs)}
                                       : Morph{su, p, std::move(coeffs)});
    off += hg.rank();
  }
  return out;
}

SortedTuple Module::generator_tuple() const {
  const Presentation& pr = presentation();
  SortedTuple t;
  t.sorts = pr.gen_sorts;
  t.entries = pr.gen_values;
  return t;
}

// ---- finitely presented modules ----

PresentedModule finitely_presented(const RingoidPtr& r, Side side,
                                   const std::vector<ObjId>& gen_sorts,
                                   const std::vector<ObjId>& rel_sorts,
                                   const std::vector<std::vector<Morph>>& cols) {
  const int t = static_cast<int>(gen_sorts.size());
  ModulePtr free_cover;
  for (int u = 0; u < t; ++u) {
    ModulePtr rep = representable(r, gen_sorts[static_cast<std::size_t>(u)], side);
    free_cover = free_cover ? direct_sum(free_cover, rep) : rep;
  }
  if (!free_cover) free_cover = zero_module(r, side);

  // relation columns as elements of F(rel_sort)
  std::vector<std::vector<Elem>> gens(static_cast<std::size_t>(r->num_objects()));
  for (std::size_t v = 0; v < cols.size(); ++v) {
    ObjId rv = rel_sorts[v];
    if (static_cast<int>(cols[v].size()) != t) fail(Errc::sort_mismatch, "relation column length");
    Elem flat;
    for (int u = 0; u < t; ++u) {
      const Morph& mu = cols[v][static_cast<std::size_t>(u)];
      ObjId su = gen_sorts[static_cast<std::size_t>(u)];
      ObjId want_dom = side == Side::right ? rv : su;
      ObjId want_cod = side == Side::right ? su : rv;
      if (mu.dom != want_dom || mu.cod != want_cod)
        fail(Errc::sort_mismatch, "relation entry has wrong hom");
      flat.insert(flat.end(), mu.coeffs.begin(), mu.coeffs.end());
    }
    gens[static_cast<std::size_t>(rv)].push_back(std::move(flat));
  }
  std::vector<Subgroup> closed = close_under_action(free_cover, std::move(gens));
  QuotientPart qp = quotient_by_subgroups(free_cover, closed, "fp");

  PresentedModule out;
  out.module = qp.module;
  out.generators.sorts = gen_sorts;
  // canonical generator u = image of the identity in the u-th representable slot
  for (int u = 0; u < t; ++u) {
    ObjId su = gen_sorts[static_cast<std::size_t>(u)];
    Elem flat = free_cover->fiber(su).zero();
    int off = 0;
    for (int w = 0; w < t; ++w) {
      ObjId sw = gen_sorts[static_cast<std::size_t>(w)];
      const FinAbGroup& hg = side == Side::right ? r->hom(su, sw) : r->hom(sw, su);
      if (w == u) {
        const Elem& id = r->identity(su).coeffs;
        for (int i = 0; i < hg.rank(); ++i) flat[static_cast<std::size_t>(off + i)] = id[static_cast<std::size_t>(i)];
      }
      off += hg.rank();
    }
    out.generators.entries.push_back(qp.proj.apply(su, flat));
  }
  return out;
}

// ---- hom enumeration ----

std::vector<ModuleMap> hom_set(const ModulePtr& m, const ModulePtr& n) {
  if (m->side() != n->side()) fail(Errc::side_mismatch, "hom_set: side mismatch");
  const Presentation& pr = m->presentation();
  const int t = static_cast<int>(pr.gen_sorts.size());

  std::vector<FinAbGroup> parts;
  for (int u = 0; u < t; ++u) parts.push_back(n->fiber(pr.gen_sorts[static_cast<std::size_t>(u)]));
  ProductGroup vars(parts);

  std::vector<FinAbGroup> eqs;
  std::vector<GroupHom> homs;
  std::vector<const GroupHom*> coeff;
  // first build all homs, then index (vector reallocation safe via two passes)
  for (std::size_t v = 0; v < pr.cols.size(); ++v)
    for (int u = 0; u < t; ++u) homs.push_back(n->action(pr.cols[v][static_cast<std::size_t>(u)]));
  for (std::size_t v = 0; v < pr.cols.size(); ++v) eqs.push_back(n->fiber(pr.rel_sorts[v]));
  LinearSystem sys;
  sys.vars = &vars;
  sys.eqs = eqs;
  sys.coeff.assign(static_cast<std::size_t>(t) * eqs.size(), nullptr);
  for (std::size_t v = 0; v < pr.cols.size(); ++v)
    for (int u = 0; u < t; ++u)
      sys.coeff[static_cast<std::size_t>(u) * eqs.size() + v] = &homs[v * static_cast<std::size_t>(t) + static_cast<std::size_t>(u)];

  Subgroup sols = Subgroup::generate(vars.group, solve_homogeneous_gens(sys));

  std::vector<ModuleMap> out;
  for (Int pos = 0; pos < sols.order(); ++pos) {
    Elem flat = sols.element(static_cast<std::size_t>(pos));
    std::vector<Elem> imgs = vars.unpack(flat);
    ModuleMap f;
    f.src = m;
    f.tgt = n;
    for (ObjId p = 0; p < m->num_objects(); ++p) {
      GroupHom h;
      h.src = m->fiber(p);
      h.tgt = n->fiber(p);
      for (int i = 0; i < h.src.rank(); ++i) {
        Elem e = h.src.zero();
        e[static_cast<std::size_t>(i)] = 1;
        std::vector<Morph> w = m->express(p, e);
        Elem img = h.tgt.zero();
        for (int u = 0; u < t; ++u)
          img = h.tgt.add(img, n->action(w[static_cast<std::size_t>(u)]).apply(imgs[static_cast<std::size_t>(u)]));
        h.img.push_back(std::move(img));
      }
      f.comp.push_back(std::move(h));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<Subgroup>> all_submodules(const ModulePtr& m) {
  if (m->order() > kMaxSubmoduleEnum) fail(Errc::size_limit, "all_submodules: module too large");
  const int n = m->num_objects();
  auto key_of = [&](const std::vector<Subgroup>& parts) {
    std::vector<Int> key;
    for (const auto& s : parts) {
      key.push_back(-1);
      key.insert(key.end(), s.elem_indices().begin(), s.elem_indices().end());
    }
    return key;
  };
  std::vector<std::vector<Subgroup>> found;
  std::set<std::vector<Int>> seen;
  std::vector<std::size_t> frontier;
  auto push = [&](std::vector<Subgroup> parts) -> bool {
    auto key = key_of(parts);
    if (!seen.insert(std::move(key)).second) return false;
    found.push_back(std::move(parts));
    frontier.push_back(found.size() - 1);
    return true;
  };
  push(close_under_action(m, {}));
  while (!frontier.empty()) {
    std::size_t cur = frontier.back();
    frontier.pop_back();
    for (ObjId p = 0; p < n; ++p) {
      const Subgroup& part = found[cur][static_cast<std::size_t>(p)];
      for (Int idx = 0; idx < m->fiber(p).order(); ++idx) {
        if (part.contains_index(idx)) continue;
        std::vector<std::vector<Elem>> gens(static_cast<std::size_t>(n));
        for (ObjId q = 0; q < n; ++q) gens[static_cast<std::size_t>(q)] = found[cur][static_cast<std::size_t>(q)].gens();
        gens[static_cast<std::size_t>(p)].push_back(m->fiber(p).element_at(idx));
        push(close_under_action(m, std::move(gens)));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [&](const std::vector<Subgroup>& a, const std::vector<Subgroup>& b) {
              return key_of(a) < key_of(b);
            });
  return found;
}

bool tuple_in_module(const ModulePtr& m, const SortedTuple& t) {
  if (t.sorts.size() != t.entries.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.sorts[i] < 0 || t.sorts[i] >= m->num_objects()) return false;
    if (static_cast<int>(t.entries[i].size()) != m->fiber(t.sorts[i]).rank()) return false;
  }
  return true;
}

}  // namespace ppcalc
