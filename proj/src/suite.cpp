#include "ppcalc/suite.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "ppcalc/duality.hpp"
#include "ppcalc/eliminations.hpp"
#include "ppcalc/error.hpp"
#include "ppcalc/family.hpp"
#include "ppcalc/fixtures.hpp"
#include "ppcalc/purity.hpp"

namespace ppcalc {

namespace {

struct SortsOverF2e {
  RingoidPtr r;
  PpFormula triv, zero, ann_eps, div_eps;
  std::vector<PpPair> sorts;  // the five 4.1 sorts in paper order
};

SortsOverF2e f2e_sorts() {
  SortsOverF2e s;
  s.r = fixture_ringoid("f2e");
  Morph eps{0, 0, Elem{0, 1}};
  s.triv = trivial_formula(s.r, Side::right, {0});
  s.zero = zero_formula(s.r, Side::right, {0});
  s.ann_eps = annihilator_formula(s.r, Side::right, 0, {eps});
  // exists y: x = y * eps
  PpFormula d;
  d.side = Side::right;
  d.ringoid = s.r;
  d.free_sorts = {0};
  d.bound_sorts = {0};
  d.rel_sorts = {0};
  d.h.assign(2, {});
  d.h[0].push_back(s.r->identity(0));
  d.h[1].push_back(s.r->neg(eps));
  d.validate();
  s.div_eps = d;
  s.sorts.push_back(make_pair(s.triv, s.zero));        // x = x
  s.sorts.push_back(make_pair(s.ann_eps, s.zero));     // x eps = 0
  s.sorts.push_back(make_pair(s.div_eps, s.zero));     // eps | x
  s.sorts.push_back(make_pair(s.triv, s.div_eps));     // (x=x)/(eps|x)
  s.sorts.push_back(make_pair(s.ann_eps, s.div_eps));  // (x eps=0)/(eps|x)
  return s;
}

PpFormula divisibility(const RingoidPtr& r, Side side, const Morph& m) {
  // right: exists y(sort cod m): x(sort dom-of-action) = y * m
  ObjId xs = side == Side::right ? m.dom : m.cod;
  ObjId ys = side == Side::right ? m.cod : m.dom;
  PpFormula f;
  f.side = side;
  f.ringoid = r;
  f.free_sorts = {xs};
  f.bound_sorts = {ys};
  f.rel_sorts = {xs};
  f.h.assign(2, {});
  f.h[0].push_back(r->identity(xs));
  f.h[1].push_back(r->neg(m));
  f.validate();
  return f;
}

std::vector<PpFormula> one_var_family(const RingoidPtr& r, Side side, const FamilyParams& base,
                                      const std::vector<ModulePtr>& panel) {
  FamilyParams p = base;
  p.max_free = 1;
  return sampled_formula_family(r, side, p, panel);
}

std::string check(bool ok, const std::string& what, std::ostringstream& log) {
  if (!ok) log << "FAILED: " << what << "; ";
  return what;
}

using Clock = std::chrono::steady_clock;

// ---------- criterion 1 ----------
CriterionResult criterion1() {
  CriterionResult res{1, "example-4.3-evaluations", false, "", 0};
  std::ostringstream log;
  SortsOverF2e s = f2e_sorts();
  ModulePtr rs1 = fixture_module("r-plus-s1", s.r, Side::right);
  const std::vector<Int> expected = {8, 4, 2, 4, 2};
  bool ok = true;
  for (std::size_t i = 0; i < s.sorts.size(); ++i) {
    Int got = pair_value(s.sorts[i], rs1).order();
    if (got != expected[i]) {
      ok = false;
      log << "sort " << i + 1 << " has order " << got << " (want " << expected[i] << "); ";
    }
  }
  res.pass = ok;
  res.detail = ok ? "orders 8,4,2,4,2 on R+S1" : log.str();
  return res;
}

// ---------- criterion 2 ----------
CriterionResult criterion2() {
  CriterionResult res{2, "example-4.1-localisation", false, "", 0};
  std::ostringstream log;
  SortsOverF2e s = f2e_sorts();
  std::vector<ModulePtr> gens{fixture_module("regular", s.r, Side::right)};
  bool ok = true;
  for (std::size_t i = 0; i < s.sorts.size(); ++i) {
    bool member = serre_membership(s.sorts[i], gens);
    bool want = i == 4;
    if (member != want) {
      ok = false;
      log << "serre membership of sort " << i + 1 << " is " << member << "; ";
    }
  }
  SearchBounds bounds;
  bounds.max_bound_vars = 1;
  bounds.max_cols = 2;
  auto loc_iso_some_direction = [&](const PpPair& a, const PpPair& b) {
    LocalizedIsoResult r1 = localized_iso(a, b, gens, bounds);
    if (r1.kind == LocalizedIsoResult::Kind::iso) return true;
    LocalizedIsoResult r2 = localized_iso(b, a, gens, bounds);
    return r2.kind == LocalizedIsoResult::Kind::iso;
  };
  // sorts 2, 3, 4 become isomorphic in the localisation
  const int iso_trio[3] = {1, 2, 3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (!loc_iso_some_direction(s.sorts[static_cast<std::size_t>(iso_trio[i])],
                                  s.sorts[static_cast<std::size_t>(iso_trio[j])])) {
        ok = false;
        log << "sorts " << iso_trio[i] + 1 << "," << iso_trio[j] + 1 << " not localized-iso; ";
      }
    }
  res.pass = ok;
  res.detail = ok ? "serre member: exactly (x*e=0)/(e|x); trio pairwise localized-iso" : log.str();
  return res;
}

// ---------- criterion 3 ----------
CriterionResult criterion3() {
  CriterionResult res{3, "duality-involution-antitone", false, "", 0};
  std::ostringstream log;
  bool ok = true;
  std::ostringstream counts;
  for (const std::string& name : {"z4", "f2e", "a2f2"}) {
    RingoidPtr r = fixture_ringoid(name);
    std::vector<ModulePtr> panel = fingerprint_panel(r, Side::right);
    FamilyParams params;
    params.max_free = 3;
    params.max_bound = 2;
    params.max_cols = 2;
    params.raw_cap_per_signature = name == "a2f2" ? 6000 : 1500;
    std::vector<PpFormula> family = sampled_formula_family(r, Side::right, params, panel);
    counts << name << ":" << family.size() << " ";
    if (family.size() < 200) {
      ok = false;
      log << name << " family has only " << family.size() << " inequivalent formulas; ";
      continue;
    }
    // involution
    std::vector<PpFormula> duals;
    for (const PpFormula& f : family) {
      PpFormula dd = dual(dual(f));
      if (!equivalent(dd, f)) {
        ok = false;
        log << name << ": DD differs from identity on a formula; ";
        break;
      }
      duals.push_back(dual(f));
    }
    if (!ok) break;
    // antitone on all same-signature ordered pairs
    std::map<std::vector<ObjId>, std::vector<std::size_t>> by_sig;
    for (std::size_t i = 0; i < family.size(); ++i) by_sig[family[i].free_sorts].push_back(i);
    // cache free realizations
    std::vector<FreeRealization> fr, frd;
    for (const PpFormula& f : family) fr.push_back(free_realization(f));
    for (const PpFormula& d : duals) frd.push_back(free_realization(d));
    for (const auto& [sig, idxs] : by_sig) {
      for (std::size_t a : idxs)
        for (std::size_t b : idxs) {
          if (a == b) continue;
          bool fwd = evaluate(family[b], fr[a].module).contains(fr[a].point);
          bool bwd = evaluate(duals[a], frd[b].module).contains(frd[b].point);
          if (fwd != bwd) {
            ok = false;
            log << name << ": antitone mismatch; ";
            break;
          }
        }
      if (!ok) break;
    }
    if (!ok) break;
  }
  res.pass = ok;
  res.detail = ok ? "families " + counts.str() + "- involution and antitone 100%" : log.str();
  return res;
}

// ---------- criterion 4 ----------
CriterionResult criterion4() {
  CriterionResult res{4, "herzog-exhaustive", false, "", 0};
  std::ostringstream log;
  bool ok = true;
  Int checked = 0;

  auto sweep = [&](const std::vector<ModulePtr>& rights, const std::vector<ModulePtr>& lefts,
                   const std::string& label) {
    for (const ModulePtr& m : rights)
      for (const ModulePtr& n : lefts) {
        TensorProduct t = tensor(m, n);
        for (ObjId p = 0; p < m->num_objects() && ok; ++p) {
          for (Int ri = 0; ri < m->fiber(p).order() && ok; ++ri)
            for (Int si = 0; si < n->fiber(p).order() && ok; ++si) {
              SortedTuple rt{{p}, {m->fiber(p).element_at(ri)}};
              SortedTuple st{{p}, {n->fiber(p).element_at(si)}};
              HerzogResult h = herzog_check(t, rt, st);
              ++checked;
              if (h.tensor_zero && !h.memberships_verified) {
                ok = false;
                log << label << ": witness memberships failed; ";
              }
            }
        }
        if (!ok) return;
      }
  };

  {
    RingoidPtr z4 = fixture_ringoid("z4");
    sweep(all_modules_up_to(z4, Side::right, 8), all_modules_up_to(z4, Side::left, 8), "z4");
  }
  if (ok) {
    RingoidPtr a2 = fixture_ringoid("a2f2");
    auto sums_up_to = [&](Side side) {
      std::vector<ModulePtr> base{representable(a2, 0, side), representable(a2, 1, side)};
      std::vector<ModulePtr> out;
      // all sums of representables with order <= 8
      std::vector<ModulePtr> frontier{zero_module(a2, side)};
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (const ModulePtr& b : base) {
          ModulePtr cand = frontier[i]->is_zero_module() ? b : direct_sum(frontier[i], b);
          if (cand->order() <= 8) {
            frontier.push_back(cand);
            out.push_back(cand);
          }
        }
      }
      return out;
    };
    sweep(sums_up_to(Side::right), sums_up_to(Side::left), "a2f2");
  }
  res.pass = ok;
  res.detail = ok ? "witness iff tensor class zero on " + std::to_string(checked) + " pairs"
                  : log.str();
  return res;
}

// ---------- criterion 5 ----------
CriterionResult criterion5() {
  CriterionResult res{5, "flat-abspure-fidelity", false, "", 0};
  std::ostringstream log;
  bool ok = true;
  for (const std::string& name : {"z4", "z6", "f2e"}) {
    RingoidPtr r = fixture_ringoid(name);
    std::vector<ModulePtr> mods = all_modules_up_to(r, Side::right, 16);
    std::vector<ModulePtr> panel = fingerprint_panel(r, Side::right);
    FamilyParams params;
    std::vector<PpFormula> onevar = one_var_family(r, Side::right, params, panel);

    std::vector<ModulePtr> flats, abspures;
    for (const ModulePtr& m : mods) {
      bool f_direct = is_flat(m).flat;
      bool f_sweep = true;
      for (const PpFormula& phi : onevar)
        if (!flat_formula_check(m, phi)) {
          f_sweep = false;
          break;
        }
      if (f_direct != f_sweep) {
        ok = false;
        log << name << "/" << m->name() << ": is_flat=" << f_direct << " sweep=" << f_sweep << "; ";
      }
      if (f_direct) flats.push_back(m);

      bool a_direct = is_absolutely_pure(m).absolutely_pure;
      bool a_sweep = true;
      for (const PpFormula& phi : onevar)
        if (!abspure_formula_check(m, phi)) {
          a_sweep = false;
          break;
        }
      if (a_direct != a_sweep) {
        ok = false;
        log << name << "/" << m->name() << ": abspure=" << a_direct << " sweep=" << a_sweep << "; ";
      }
      if (a_direct) abspures.push_back(m);
    }
    if (name == "z4") {
      // flats and abspures of order <= 16 are exactly {0, R, R^2}
      RingoidPtr z4 = r;
      ModulePtr reg = representable(z4, 0, Side::right);
      std::vector<ModulePtr> expected{zero_module(z4, Side::right), reg, direct_sum(reg, reg)};
      auto same_lists = [&](std::vector<ModulePtr> got) {
        if (got.size() != expected.size()) return false;
        for (const ModulePtr& e : expected) {
          bool hit = false;
          for (const ModulePtr& g : got)
            if (modules_isomorphic(e, g)) hit = true;
          if (!hit) return false;
        }
        return true;
      };
      if (!same_lists(flats)) {
        ok = false;
        log << "z4 flats are not {0, R, R^2} (got " << flats.size() << "); ";
      }
      if (!same_lists(abspures)) {
        ok = false;
        log << "z4 absolutely pure are not {0, R, R^2} (got " << abspures.size() << "); ";
      }
    }
  }
  res.pass = ok;
  res.detail = ok ? "direct decisions match formula sweeps; z4 lists exact" : log.str();
  return res;
}

// ---------- criterion 6 ----------
CriterionResult criterion6() {
  CriterionResult res{6, "purity-double-oracle", false, "", 0};
  std::ostringstream log;
  bool ok = true;
  Int inclusions = 0;
  for (const std::string& name : {"z4", "f2e"}) {
    RingoidPtr r = fixture_ringoid(name);
    for (const ModulePtr& n : all_modules_up_to(r, Side::right, 16)) {
      for (const auto& parts : all_submodules(n)) {
        SubmodulePart sub = submodule_from_subgroups(n, parts, "M");
        try {
          (void)is_pure_submodule(sub.incl);
          ++inclusions;
        } catch (const Error& e) {
          ok = false;
          log << name << ": oracle disagreement or error (" << e.what() << "); ";
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  if (ok) {
    // {0,2} in Z/4 is impure with witness equivalent to 2 | x
    RingoidPtr z4 = fixture_ringoid("z4");
    ModulePtr reg = representable(z4, 0, Side::right);
    std::vector<Subgroup> parts{Subgroup::generate(reg->fiber(0), {Elem{2}})};
    SubmodulePart sub = submodule_from_subgroups(reg, parts, "2Z4");
    PurityResult pr = is_pure_submodule(sub.incl);
    PpFormula div2 = divisibility(z4, Side::right, Morph{0, 0, Elem{2}});
    if (pr.pure || !pr.witness_formula || !equivalent(*pr.witness_formula, div2)) {
      ok = false;
      log << "2Z4 in Z4 not reported impure with witness 2|x; ";
    }
    // Z/4 -> Z/2 is not a pure epi
    QuotientPart q = quotient_by_subgroups(reg, parts, "Z2");
    PureEpiResult pe = is_pure_epi(q.proj);
    if (pe.pure_epi) {
      ok = false;
      log << "Z4 -> Z2 wrongly reported as pure epi; ";
    }
  }
  res.pass = ok;
  res.detail = ok ? "oracles agree on " + std::to_string(inclusions) +
                        " inclusions; 2Z4 witness = 2|x; Z4->Z2 rejected"
                  : log.str();
  return res;
}

// ---------- criterion 7 ----------
CriterionResult criterion7() {
  CriterionResult res{7, "thm-5.2-harness", false, "", 0};
  std::ostringstream log;
  bool ok = true;
  FamilyParams family;
  family.max_free = 2;
  family.max_bound = 1;
  family.max_cols = 1;
  family.raw_cap_per_signature = 400;
  SearchBounds bounds;
  bounds.max_bound_vars = 1;
  bounds.max_cols = 2;
  bounds.raw_cap = 3000;
  for (const std::string& name : {"z6", "z2xz2", "m2f2"}) {
    Thm52Report rep = thm52_harness(fixture_ringoid(name), family, bounds, 40);
    if (!rep.vnr || rep.anomaly || rep.qe_not_found > 0 || rep.qe_provably_none > 0 ||
        rep.embed_not_found > 0 || rep.embed_not_embeddable > 0) {
      ok = false;
      log << name << ": vnr=" << rep.vnr << " qe(found/none/nf)=" << rep.qe_found << "/"
          << rep.qe_provably_none << "/" << rep.qe_not_found << " embed(m/nf/ne)="
          << rep.embed_monic << "/" << rep.embed_not_found << "/" << rep.embed_not_embeddable
          << "; ";
    }
  }
  for (const std::string& name : {"z4", "f2e"}) {
    VnrResult v = is_von_neumann_regular(*fixture_ringoid(name));
    if (v.regular) {
      ok = false;
      log << name << " wrongly reported VNR; ";
    }
  }
  {
    RingoidPtr z4 = fixture_ringoid("z4");
    PpFormula div2 = divisibility(z4, Side::right, Morph{0, 0, Elem{2}});
    QeResult q = qe_search(div2, 3);
    if (q.kind != QeResult::Kind::provably_none) {
      ok = false;
      log << "qe(2|x over z4) did not certify ProvablyNone; ";
    } else if (q.checked_classes.size() != 3) {
      ok = false;
      log << "qe over z4 checked " << q.checked_classes.size() << " classes (want 3); ";
    }
  }
  res.pass = ok;
  res.detail = ok ? "VNR rings pass all searches; z4/f2e non-VNR; 2|x ProvablyNone over 3 classes"
                  : log.str();
  return res;
}

// ---------- criterion 8 ----------
CriterionResult criterion8() {
  CriterionResult res{8, "pair-category-exactness", false, "", 0};
  std::ostringstream log;
  bool ok = true;
  int morphisms_checked = 0;
  for (const std::string& name : {"z4", "f2e"}) {
    RingoidPtr r = fixture_ringoid(name);
    std::vector<ModulePtr> mods = all_modules_up_to(r, Side::right, 16);
    std::vector<ModulePtr> panel = fingerprint_panel(r, Side::right);
    FamilyParams params;
    std::vector<PpFormula> onevar = one_var_family(r, Side::right, params, panel);
    // pairs from the one-variable family
    std::vector<PpPair> pairs;
    for (const PpFormula& top : onevar)
      for (const PpFormula& bot : onevar)
        if (implies(bot, top).holds) pairs.push_back(PpPair{top, bot});
    // search morphisms between pairs
    std::vector<PpMorphism> morphisms;
    for (const PpPair& src : pairs) {
      for (const PpPair& tgt : pairs) {
        if (static_cast<int>(morphisms.size()) >= 10 * 2) break;
        std::vector<ObjId> joint = src.top.free_sorts;
        joint.insert(joint.end(), tgt.top.free_sorts.begin(), tgt.top.free_sorts.end());
        enumerate_formulas(r, Side::right, joint, 0, 1, 64, [&](PpFormula&& rho) {
          MorphismCheck c = check_morphism(rho, src, tgt);
          if (c.ok) {
            morphisms.push_back(PpMorphism{src, tgt, std::move(rho)});
            return false;
          }
          return true;
        });
      }
    }
    if (static_cast<int>(morphisms.size()) < 20) {
      ok = false;
      log << name << ": only " << morphisms.size() << " validated morphisms; ";
    }
    for (const PpMorphism& m : morphisms) {
      KernelCokernelImage kci = kernel_cokernel_image(m);
      for (const ModulePtr& mod : mods) {
        GroupHom h = morphism_on_module(m, mod);
        Subgroup img = Subgroup::generate(h.tgt, h.img);
        Subgroup ker = Subgroup::generate(h.src, h.kernel_generators());
        Int coker = h.tgt.order() / img.order();
        Int k_pair = pair_value(kci.kernel, mod).order();
        Int i_pair = pair_value(kci.image, mod).order();
        Int c_pair = pair_value(kci.cokernel, mod).order();
        if (k_pair != ker.order() || i_pair != img.order() || c_pair != coker ||
            ker.order() * img.order() != h.src.order()) {
          ok = false;
          log << name << "/" << mod->name() << ": kernel/image/cokernel orders (" << k_pair << ","
              << i_pair << "," << c_pair << ") vs group (" << ker.order() << "," << img.order()
              << "," << coker << "); ";
          break;
        }
      }
      ++morphisms_checked;
      if (!ok) break;
    }
    if (!ok) break;
  }
  res.pass = ok;
  res.detail = ok ? std::to_string(morphisms_checked) + " morphisms exact on all test modules"
                  : log.str();
  return res;
}

// ---------- criterion 9 ----------
CriterionResult criterion9() {
  CriterionResult res{9, "invariant-multiplicativity", false, "", 0};
  std::ostringstream log;
  bool ok = true;
  Int checks = 0;
  for (const std::string& name : {"z4", "z6", "f2e"}) {
    RingoidPtr r = fixture_ringoid(name);
    std::vector<ModulePtr> mods = all_modules_up_to(r, Side::right, 8);
    std::vector<ModulePtr> panel = fingerprint_panel(r, Side::right);
    FamilyParams params;
    std::vector<PpFormula> onevar = one_var_family(r, Side::right, params, panel);
    std::vector<PpPair> pairs;
    for (const PpFormula& top : onevar)
      for (const PpFormula& bot : onevar)
        if (implies(bot, top).holds) pairs.push_back(PpPair{top, bot});
    for (const PpPair& p : pairs)
      for (const ModulePtr& a : mods)
        for (const ModulePtr& b : mods) {
          Int ia = invariant(p.top, p.bottom, a);
          Int ib = invariant(p.top, p.bottom, b);
          Int iab = invariant(p.top, p.bottom, direct_sum(a, b));
          ++checks;
          if (iab != ia * ib) {
            ok = false;
            log << name << ": invariant not multiplicative; ";
            break;
          }
        }
  }
  res.pass = ok;
  res.detail = ok ? std::to_string(checks) + " products checked" : log.str();
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
  std::vector<CriterionResult (*)()> criteria = {criterion1, criterion2, criterion3,
                                                 criterion4, criterion5, criterion6,
                                                 criterion7, criterion8, criterion9};
  std::vector<CriterionResult> results;
  for (auto* fn : criteria) {
    auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.number == 0) r.number = static_cast<int>(results.size()) + 1;
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.number << " [" << r.name << "] ("
        << static_cast<int>(r.seconds * 1000) << " ms): " << r.detail << "\n";
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ppcalc
