#include "ppcalc/eliminations.hpp"

#include <sstream>

#include "ppcalc/error.hpp"

namespace ppcalc {

namespace {
constexpr Int kQeCompleteLimit = 512;

ModulePtr free_on_sorts(const RingoidPtr& r, Side side, const std::vector<ObjId>& sorts) {
  ModulePtr f;
  for (ObjId s : sorts) {
    ModulePtr rep = representable(r, s, side);
    f = f ? direct_sum(f, rep) : rep;
  }
  return f ? f : zero_module(r, side);
}

// Greedy module generators of a submodule given by parts inside f.
struct SubGen {
  ObjId sort;
  Elem flat;
};
std::vector<SubGen> greedy_generators(const ModulePtr& f, const std::vector<Subgroup>& parts) {
  std::vector<SubGen> gens;
  std::vector<std::vector<Elem>> chosen(static_cast<std::size_t>(f->num_objects()));
  std::vector<Subgroup> closed = close_under_action(f, chosen);
  for (ObjId p = 0; p < f->num_objects(); ++p) {
    for (Int pos = 0; pos < parts[static_cast<std::size_t>(p)].order(); ++pos) {
      Elem e = parts[static_cast<std::size_t>(p)].element(static_cast<std::size_t>(pos));
      if (f->fiber(p).is_zero(e)) continue;
      if (closed[static_cast<std::size_t>(p)].contains(e)) continue;
      gens.push_back({p, e});
      chosen[static_cast<std::size_t>(p)].push_back(e);
      closed = close_under_action(f, chosen);
    }
  }
  return gens;
}

// Quantifier-free formula whose columns are the generators of a submodule of
// the free cover on the formula's free sorts.
PpFormula qf_from_submodule(const RingoidPtr& r, Side side, const std::vector<ObjId>& free_sorts,
                            const std::vector<SubGen>& gens) {
  PpFormula out = trivial_formula(r, side, free_sorts);
  const int n = static_cast<int>(free_sorts.size());
  for (const SubGen& g : gens) {
    out.rel_sorts.push_back(g.sort);
    int off = 0;
    for (int u = 0; u < n; ++u) {
      ObjId su = free_sorts[static_cast<std::size_t>(u)];
      const FinAbGroup& hg = side == Side::right ? r->hom(g.sort, su) : r->hom(su, g.sort);
      Elem coeffs(g.flat.begin() + off, g.flat.begin() + off + hg.rank());
      out.h[static_cast<std::size_t>(u)].push_back(
          side == Side::right ? Morph{g.sort, su, std::move(coeffs)}
                              : Morph{su, g.sort, std::move(coeffs)});
      off += hg.rank();
    }
  }
  out.validate();
  return out;
}

}  // namespace

QeResult qe_search(const PpFormula& phi, int max_cols) {
  phi.validate();
  const RingoidPtr& r = phi.ringoid;
  QeResult res;

  if (phi.num_bound() == 0) {  // already quantifier free
    res.kind = QeResult::Kind::found;
    res.quantifier_free = phi;
    return res;
  }

  ModulePtr f = free_on_sorts(r, phi.side, phi.free_sorts);
  if (f->order() <= kQeCompleteLimit) {
    std::vector<PpFormula> classes;
    for (const auto& parts : all_submodules(f)) {
      PpFormula cand = qf_from_submodule(r, phi.side, phi.free_sorts, greedy_generators(f, parts));
      if (equivalent(phi, cand)) {
        res.kind = QeResult::Kind::found;
        res.quantifier_free = std::move(cand);
        return res;
      }
      classes.push_back(std::move(cand));
    }
    res.kind = QeResult::Kind::provably_none;
    res.checked_classes = std::move(classes);
    return res;
  }

  // bounded fallback
  bool stop = false;
  enumerate_formulas(r, phi.side, phi.free_sorts, 0, max_cols, 20000, [&](PpFormula&& cand) {
    if (equivalent(phi, cand)) {
      res.kind = QeResult::Kind::found;
      res.quantifier_free = std::move(cand);
      stop = true;
      return false;
    }
    return true;
  });
  if (!stop) res.kind = QeResult::Kind::not_found;
  return res;
}

std::vector<std::vector<ObjId>> default_home_sorts(const RingoidPtr& r) {
  std::vector<std::vector<ObjId>> homes;
  for (ObjId p = 0; p < r->num_objects(); ++p) homes.push_back({p});
  for (ObjId p = 0; p < r->num_objects(); ++p)
    for (ObjId q = 0; q < r->num_objects(); ++q) homes.push_back({p, q});
  return homes;
}

EmbedResult embed_search(const PpPair& p, const std::vector<std::vector<ObjId>>& home_sorts,
                         const SearchBounds& bounds) {
  const RingoidPtr& r = p.top.ringoid;
  const Side side = p.top.side;
  EmbedResult res;

  FreeRealization test = free_realization(p.top);
  std::vector<ModulePtr> panel{test.module};
  for (ObjId obj = 0; obj < r->num_objects(); ++obj)
    panel.push_back(representable(r, obj, side));

  auto kernel_trivial = [&](const PpMorphism& m) {
    KernelCokernelImage kci = kernel_cokernel_image(m);
    return equivalent(kci.kernel.top, kci.kernel.bottom);
  };

  for (const auto& home : home_sorts) {
    PpPair home_pair = home_sort_pair(r, side, home);

    // constructed candidate: a splitting of the bottom's column submodule
    // gives rho: y = x * e with kernel exactly the bottom
    if (home == p.top.free_sorts) {
      QeResult qf = qe_search(p.bottom, bounds.max_cols);
      if (qf.kind == QeResult::Kind::found) {
        ModulePtr f = free_on_sorts(r, side, p.top.free_sorts);
        // submodule generated by the columns of the quantifier-free bottom
        std::vector<std::vector<Elem>> colgens(static_cast<std::size_t>(r->num_objects()));
        const PpFormula& chi = *qf.quantifier_free;
        const int n = chi.num_free();
        for (int j = 0; j < chi.num_cols(); ++j) {
          Elem flat;
          for (int u = 0; u < n; ++u)
            for (Int c : chi.h[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)].coeffs)
              flat.push_back(c);
          colgens[static_cast<std::size_t>(chi.rel_sorts[static_cast<std::size_t>(j)])].push_back(flat);
        }
        std::vector<Subgroup> kparts = close_under_action(f, std::move(colgens));
        SubmodulePart ksub = submodule_from_subgroups(f, kparts, "K");
        for (const ModuleMap& pi : hom_set(f, ksub.module)) {
          if (!maps_equal(compose_maps(pi, ksub.incl), ModuleMap::identity(ksub.module))) continue;
          ModuleMap e = compose_maps(ksub.incl, pi);  // idempotent with image K
          // rho columns: y_i - sum_u x_u * w_iu = 0 where e(gen_i) = sum_u gen_u . w_iu
          PpFormula rho;
          rho.side = side;
          rho.ringoid = r;
          rho.free_sorts = p.top.free_sorts;
          rho.free_sorts.insert(rho.free_sorts.end(), home.begin(), home.end());
          rho.rel_sorts = home;
          rho.h.assign(static_cast<std::size_t>(2 * n), {});
          for (int row = 0; row < 2 * n; ++row)
            for (int col = 0; col < n; ++col) {
              ObjId vs = rho.var_sort(row);
              ObjId rs = home[static_cast<std::size_t>(col)];
              rho.h[static_cast<std::size_t>(row)].push_back(
                  side == Side::right ? r->zero_morph(rs, vs) : r->zero_morph(vs, rs));
            }
          for (int i = 0; i < n; ++i) {
            ObjId si = p.top.free_sorts[static_cast<std::size_t>(i)];
            rho.h[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i)] = r->identity(si);
            // e on the canonical generator of slot i
            Elem gi = f->fiber(si).zero();
            int off = 0;
            for (int u = 0; u < n; ++u) {
              ObjId su = p.top.free_sorts[static_cast<std::size_t>(u)];
              const FinAbGroup& hg = side == Side::right ? r->hom(si, su) : r->hom(su, si);
              if (u == i)
                for (int c = 0; c < hg.rank(); ++c)
                  gi[static_cast<std::size_t>(off + c)] = r->identity(si).coeffs[static_cast<std::size_t>(c)];
              off += hg.rank();
            }
            Elem egi = e.apply(si, gi);
            off = 0;
            for (int u = 0; u < n; ++u) {
              ObjId su = p.top.free_sorts[static_cast<std::size_t>(u)];
              const FinAbGroup& hg = side == Side::right ? r->hom(si, su) : r->hom(su, si);
              Elem w(egi.begin() + off, egi.begin() + off + hg.rank());
              Morph wm = side == Side::right ? Morph{si, su, std::move(w)} : Morph{su, si, std::move(w)};
              off += hg.rank();
              rho.h[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] = r->neg(wm);
            }
          }
          rho.validate();
          MorphismCheck c = check_morphism(rho, p, home_pair);
          if (!c.ok) continue;
          PpMorphism cand{p, home_pair, rho};
          if (kernel_trivial(cand)) {
            res.kind = EmbedResult::Kind::monic;
            res.mono = std::move(cand);
            return res;
          }
        }
      }
    }

    // bounded blind search
    std::vector<ObjId> joint = p.top.free_sorts;
    joint.insert(joint.end(), home.begin(), home.end());
    std::optional<PpMorphism> found;
    enumerate_formulas(r, side, joint, bounds.max_bound_vars, bounds.max_cols, bounds.raw_cap,
                       [&](PpFormula&& rho) {
                         for (const ModulePtr& m : panel)
                           if (!morphism_plausible_on(rho, p, home_pair, m)) return true;
                         MorphismCheck c = check_morphism(rho, p, home_pair);
                         if (!c.ok) return true;
                         PpMorphism cand{p, home_pair, rho};
                         if (!kernel_trivial(cand)) return true;
                         found = std::move(cand);
                         return false;
                       });
    if (found) {
      res.kind = EmbedResult::Kind::monic;
      res.mono = std::move(found);
      return res;
    }
  }

  // sound non-embeddability certificate: the pair's value exceeds every home
  // sort's value on some test module
  bool all_obstructed = true;
  std::ostringstream cert;
  for (const auto& home : home_sorts) {
    bool obstructed = false;
    for (const ModulePtr& m : panel) {
      Int pv = pair_value(p, m).order();
      Int hv = 1;
      for (ObjId s : home) hv *= m->fiber(s).order();
      if (pv > hv) {
        obstructed = true;
        cert << "on " << m->name() << ": pair value " << pv << " > home value " << hv << "; ";
        break;
      }
    }
    if (!obstructed) {
      all_obstructed = false;
      break;
    }
  }
  if (all_obstructed && !home_sorts.empty()) {
    res.kind = EmbedResult::Kind::not_embeddable;
    res.certificate = cert.str();
    return res;
  }
  res.kind = EmbedResult::Kind::not_found;
  return res;
}

Thm52Report thm52_harness(const RingoidPtr& r, const FamilyParams& family_params,
                          const SearchBounds& bounds, std::size_t max_pairs) {
  Thm52Report rep;
  VnrResult vnr = is_von_neumann_regular(*r);
  rep.vnr = vnr.regular;
  rep.vnr_counterexample = vnr.counterexample;

  std::vector<ModulePtr> panel = fingerprint_panel(r, Side::right);
  std::vector<PpFormula> family = sampled_formula_family(r, Side::right, family_params, panel);
  rep.formulas = static_cast<int>(family.size());

  for (const PpFormula& f : family) {
    QeResult q = qe_search(f, bounds.max_cols);
    switch (q.kind) {
      case QeResult::Kind::found: ++rep.qe_found; break;
      case QeResult::Kind::provably_none: ++rep.qe_provably_none; break;
      case QeResult::Kind::not_found: ++rep.qe_not_found; break;
    }
  }

  std::vector<std::vector<ObjId>> homes = default_home_sorts(r);
  for (std::size_t i = 0; i < family.size() && rep.pairs < static_cast<int>(max_pairs); ++i) {
    for (std::size_t j = 0; j < family.size() && rep.pairs < static_cast<int>(max_pairs); ++j) {
      if (i == j) continue;
      if (!family[i].same_signature(family[j])) continue;
      if (!implies(family[j], family[i]).holds) continue;
      PpPair p{family[i], family[j]};
      ++rep.pairs;
      EmbedResult e = embed_search(p, homes, bounds);
      switch (e.kind) {
        case EmbedResult::Kind::monic: ++rep.embed_monic; break;
        case EmbedResult::Kind::not_found: ++rep.embed_not_found; break;
        case EmbedResult::Kind::not_embeddable: ++rep.embed_not_embeddable; break;
      }
    }
  }

  rep.anomaly = rep.vnr && (rep.qe_provably_none > 0 || rep.qe_not_found > 0 ||
                            rep.embed_not_found > 0 || rep.embed_not_embeddable > 0);
  if (rep.anomaly) rep.notes.push_back("VNR ringoid failed an elimination search");
  return rep;
}

}  // namespace ppcalc
