#include "ppcalc/family.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ppcalc/error.hpp"

namespace ppcalc {

namespace {

// all tuples of length len over 0..n-1, lexicographic
std::vector<std::vector<ObjId>> sort_tuples(int n, int len) {
  std::vector<std::vector<ObjId>> out;
  std::vector<ObjId> cur(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  if (len == 0) out.assign(1, {});
  return out;
}

// drop zero columns, sort columns, drop duplicate columns
void normalize_columns(PpFormula& f) {
  const RingoidPtr& r = f.ringoid;
  std::vector<std::pair<std::vector<Int>, int>> keyed;
  for (int j = 0; j < f.num_cols(); ++j) {
    std::vector<Int> key;
    key.push_back(f.rel_sorts[static_cast<std::size_t>(j)]);
    bool all_zero = true;
    for (int i = 0; i < f.num_free() + f.num_bound(); ++i) {
      const Morph& e = f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!r->is_zero(e)) all_zero = false;
      key.insert(key.end(), e.coeffs.begin(), e.coeffs.end());
    }
    if (!all_zero) keyed.emplace_back(std::move(key), j);
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<ObjId> new_rel;
  std::vector<std::vector<Morph>> new_h(f.h.size());
  for (const auto& [key, j] : keyed) {
    new_rel.push_back(f.rel_sorts[static_cast<std::size_t>(j)]);
    for (std::size_t i = 0; i < f.h.size(); ++i)
      new_h[i].push_back(f.h[i][static_cast<std::size_t>(j)]);
  }
  f.rel_sorts = std::move(new_rel);
  f.h = std::move(new_h);
}

std::vector<Int> syntactic_key(const PpFormula& f) {
  std::vector<Int> key;
  key.push_back(f.num_bound());
  for (ObjId s : f.bound_sorts) key.push_back(s);
  key.push_back(f.num_cols());
  for (int j = 0; j < f.num_cols(); ++j) {
    key.push_back(f.rel_sorts[static_cast<std::size_t>(j)]);
    for (int i = 0; i < f.num_free() + f.num_bound(); ++i) {
      const Morph& e = f.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      key.insert(key.end(), e.coeffs.begin(), e.coeffs.end());
    }
  }
  return key;
}

}  // namespace

void enumerate_formulas(const RingoidPtr& r, Side side, const std::vector<ObjId>& free_sorts,
                        int max_bound_vars, int max_cols, std::size_t raw_cap,
                        const std::function<bool(PpFormula&&)>& cb) {
  const int nobj = r->num_objects();
  const int n = static_cast<int>(free_sorts.size());
  for (int m = 0; m <= max_bound_vars; ++m) {
    for (const auto& bound : sort_tuples(nobj, m)) {
      const int kmin = m == 0 ? 0 : 1;  // unused bound variables are redundant
      for (int k = kmin; k <= max_cols; ++k) {
        for (const auto& rels : sort_tuples(nobj, k)) {
          // cell bases
          std::vector<const FinAbGroup*> cells;
          double raw_size = 1;
          for (int i = 0; i < n + m; ++i)
            for (int j = 0; j < k; ++j) {
              ObjId vs = i < n ? free_sorts[static_cast<std::size_t>(i)]
                               : bound[static_cast<std::size_t>(i - n)];
              ObjId rs = rels[static_cast<std::size_t>(j)];
              const FinAbGroup& hg = side == Side::right ? r->hom(rs, vs) : r->hom(vs, rs);
              cells.push_back(&hg);
              raw_size *= static_cast<double>(hg.order());
            }
          if (k == 0) {
            PpFormula f = trivial_formula(r, side, free_sorts);
            if (!cb(std::move(f))) return;
            continue;
          }
          std::size_t total = raw_size > 1e18 ? static_cast<std::size_t>(-1)
                                              : static_cast<std::size_t>(raw_size);
          std::size_t stride = 1;
          if (total > raw_cap) stride = total / raw_cap + 1;
          for (std::size_t idx = 0; idx < total; idx += stride) {
            PpFormula f;
            f.side = side;
            f.ringoid = r;
            f.free_sorts = free_sorts;
            f.bound_sorts = bound;
            f.rel_sorts = rels;
            f.h.assign(static_cast<std::size_t>(n + m), {});
            std::size_t rest = idx;
            bool ok = true;
            for (int i = 0; i < n + m && ok; ++i) {
              for (int j = 0; j < k; ++j) {
                const FinAbGroup& hg = *cells[static_cast<std::size_t>(i * k + j)];
                Int digit = static_cast<Int>(rest % static_cast<std::size_t>(hg.order()));
                rest /= static_cast<std::size_t>(hg.order());
                ObjId vs = i < n ? free_sorts[static_cast<std::size_t>(i)]
                                 : bound[static_cast<std::size_t>(i - n)];
                ObjId rs = rels[static_cast<std::size_t>(j)];
                Morph e = side == Side::right ? Morph{rs, vs, hg.element_at(digit)}
                                              : Morph{vs, rs, hg.element_at(digit)};
                f.h[static_cast<std::size_t>(i)].push_back(std::move(e));
              }
            }
            if (!cb(std::move(f))) return;
          }
        }
      }
    }
  }
}

std::vector<PpFormula> sampled_formula_family(const RingoidPtr& r, Side side,
                                              const FamilyParams& params,
                                              const std::vector<ModulePtr>& panel) {
  std::vector<PpFormula> family;
  const int nobj = r->num_objects();

  for (int n = 1; n <= params.max_free; ++n) {
    for (const auto& frees : sort_tuples(nobj, n)) {
      std::set<std::vector<Int>> syntactic_seen;
      std::map<std::vector<Int>, std::vector<std::size_t>> buckets;
      enumerate_formulas(
          r, side, frees, params.max_bound, params.max_cols, params.raw_cap_per_signature,
          [&](PpFormula&& f) {
            normalize_columns(f);
            if (!syntactic_seen.insert(syntactic_key(f)).second) return true;
            std::vector<Int> fp;
            for (const ModulePtr& m : panel) {
              EvaluatedSet ev = evaluate(f, m);
              fp.push_back(-1);
              fp.insert(fp.end(), ev.sols.elem_indices().begin(), ev.sols.elem_indices().end());
            }
            auto& bucket = buckets[fp];
            for (std::size_t idx : bucket)
              if (equivalent(f, family[idx])) return true;
            bucket.push_back(family.size());
            family.push_back(std::move(f));
            return true;
          });
    }
  }
  return family;
}

std::vector<PpFormula> probe_formulas(const RingoidPtr& r, Side side) {
  std::vector<PpFormula> probes;
  const int nobj = r->num_objects();
  for (ObjId s = 0; s < nobj; ++s) {
    probes.push_back(trivial_formula(r, side, {s}));
    for (ObjId t = 0; t < nobj; ++t) {
      // annihilators x * m = 0 and divisibilities exists y: x = y * m
      const FinAbGroup& ann_hom = side == Side::right ? r->hom(t, s) : r->hom(s, t);
      for (Int e = 1; e < ann_hom.order(); ++e) {
        Morph m = side == Side::right ? Morph{t, s, ann_hom.element_at(e)}
                                      : Morph{s, t, ann_hom.element_at(e)};
        probes.push_back(annihilator_formula(r, side, s, {m}));
      }
      const FinAbGroup& div_hom = side == Side::right ? r->hom(s, t) : r->hom(t, s);
      for (Int e = 1; e < div_hom.order(); ++e) {
        // right: x_s = y_t * m with m in hom(s, t) acting fiber(t) -> fiber(s)
        PpFormula f;
        f.side = side;
        f.ringoid = r;
        f.free_sorts = {s};
        f.bound_sorts = {t};
        f.rel_sorts = {s};
        Morph m = side == Side::right ? Morph{s, t, div_hom.element_at(e)}
                                      : Morph{t, s, div_hom.element_at(e)};
        f.h.assign(2, {});
        f.h[0].push_back(r->identity(s));
        f.h[1].push_back(r->neg(m));
        f.validate();
        probes.push_back(std::move(f));
      }
    }
  }
  return probes;
}

std::vector<ModulePtr> simple_modules(const RingoidPtr& r, Side side) {
  std::vector<ModulePtr> simples;
  for (ObjId p = 0; p < r->num_objects(); ++p) {
    ModulePtr rep = representable(r, p, side);
    if (rep->is_zero_module()) continue;
    auto subs = all_submodules(rep);
    // maximal proper submodules
    for (std::size_t i = 0; i < subs.size(); ++i) {
      Int oi = 1;
      for (const auto& s : subs[i]) oi *= s.order();
      if (oi == rep->order()) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
        if (i == j) continue;
        Int oj = 1;
        for (const auto& s : subs[j]) oj *= s.order();
        if (oj == rep->order() || oj <= oi) continue;
        bool contains = true;
        for (std::size_t p2 = 0; p2 < subs[i].size() && contains; ++p2)
          contains = subs[j][p2].contains_subgroup(subs[i][p2]);
        if (contains) maximal = false;
      }
      if (!maximal) continue;
      ModulePtr q = quotient_by_subgroups(rep, subs[i], "S").module;
      bool dup = false;
      for (const ModulePtr& s : simples)
        if (modules_isomorphic(s, q)) {
          dup = true;
          break;
        }
      if (!dup) simples.push_back(q);
    }
  }
  return simples;
}

std::vector<std::vector<Subgroup>> submodules_of_index_at_most(const ModulePtr& f, Int max_index) {
  const int n = f->num_objects();
  std::vector<ModulePtr> simples = simple_modules(f->ringoid(), f->side());
  auto key_of = [&](const std::vector<Subgroup>& parts) {
    std::vector<Int> key;
    for (const auto& s : parts) {
      key.push_back(-1);
      key.insert(key.end(), s.elem_indices().begin(), s.elem_indices().end());
    }
    return key;
  };
  std::vector<std::vector<Subgroup>> out;
  std::set<std::vector<Int>> seen;
  std::vector<std::pair<std::size_t, Int>> work;  // (index into out, module index)

  std::vector<Subgroup> full;
  for (ObjId p = 0; p < n; ++p) full.push_back(Subgroup::full(f->fiber(p)));
  seen.insert(key_of(full));
  out.push_back(full);
  work.emplace_back(0, 1);

  while (!work.empty()) {
    auto [cur, idx] = work.back();
    work.pop_back();
    std::vector<Subgroup> parts = out[cur];
    SubmodulePart sp = submodule_from_subgroups(f, parts, "K");
    Int korder = sp.module->order();
    for (const ModulePtr& s : simples) {
      if (idx * s->order() > max_index) continue;
      for (const ModuleMap& map : hom_set(sp.module, s)) {
        bool zero = true;
        for (const auto& c : map.comp)
          for (const auto& img : c.img)
            if (!c.tgt.is_zero(img)) zero = false;
        if (zero) continue;
        // kernel of map, translated into f's fibers
        std::vector<Subgroup> kparts;
        Int knew = 1;
        for (ObjId p = 0; p < n; ++p) {
          std::vector<Elem> kergens = map.comp[static_cast<std::size_t>(p)].kernel_generators();
          std::vector<Elem> in_f;
          for (const Elem& g : kergens) in_f.push_back(sp.incl.apply(p, g));
          kparts.push_back(Subgroup::generate(f->fiber(p), std::move(in_f)));
          knew *= kparts.back().order();
        }
        Int step = korder / knew;
        if (step <= 1) continue;  // not proper (map not epi would give step 1 only if zero)
        Int nidx = idx * step;
        if (nidx > max_index) continue;
        auto key = key_of(kparts);
        if (seen.insert(std::move(key)).second) {
          out.push_back(kparts);
          work.emplace_back(out.size() - 1, nidx);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key_of(a) < key_of(b); });
  return out;
}

std::vector<ModulePtr> fingerprint_panel(const RingoidPtr& r, Side side) {
  std::vector<ModulePtr> panel;
  for (ObjId p = 0; p < r->num_objects(); ++p) panel.push_back(representable(r, p, side));
  for (const ModulePtr& s : simple_modules(r, side)) panel.push_back(s);
  return panel;
}

namespace {
std::vector<Int> module_fingerprint(const ModulePtr& m, const std::vector<PpFormula>& probes) {
  std::vector<Int> fp;
  for (ObjId p = 0; p < m->num_objects(); ++p) {
    fp.push_back(-1);
    for (Int f : m->fiber(p).invariant_factors()) fp.push_back(f);
  }
  fp.push_back(-2);
  for (const PpFormula& f : probes) fp.push_back(evaluate(f, m).order());
  return fp;
}
}  // namespace

std::vector<ModulePtr> all_modules_up_to(const RingoidPtr& r, Side side, Int max_order) {
  std::vector<PpFormula> probes = probe_formulas(r, side);
  std::vector<ModulePtr> classes;
  std::vector<std::vector<Int>> fps;
  auto consider = [&](const ModulePtr& m) {
    if (m->order() > max_order) return;
    std::vector<Int> fp = module_fingerprint(m, probes);
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (fps[i] == fp && modules_isomorphic(classes[i], m)) return;
    classes.push_back(m);
    fps.push_back(std::move(fp));
  };

  consider(zero_module(r, side));
  int tmax = 0;
  while ((Int(1) << (tmax + 1)) <= max_order) ++tmax;
  for (int t = 1; t <= tmax; ++t) {
    for (const auto& sorts : sort_tuples(r->num_objects(), t)) {
      ModulePtr f;
      for (ObjId s : sorts) {
        ModulePtr rep = representable(r, s, side);
        f = f ? direct_sum(f, rep) : rep;
      }
      if (f->order() <= 1) continue;
      // the quotient order equals the index of the kernel submodule
      for (const auto& parts : submodules_of_index_at_most(f, max_order)) {
        Int porder = 1;
        for (const auto& s : parts) porder *= s.order();
        if (f->order() / porder > max_order) continue;
        consider(quotient_by_subgroups(f, parts, "M").module);
      }
    }
  }
  return classes;
}

bool modules_isomorphic(const ModulePtr& a, const ModulePtr& b) {
  if (a->order() != b->order()) return false;
  for (ObjId p = 0; p < a->num_objects(); ++p)
    if (a->fiber(p).invariant_factors() != b->fiber(p).invariant_factors()) return false;
  if (a->order() == 1) return true;
  for (const ModuleMap& f : hom_set(a, b))
    if (f.injective() && f.surjective()) return true;
  return false;
}

}  // namespace ppcalc
