#include "ppcalc/purity.hpp"

#include "ppcalc/error.hpp"

namespace ppcalc {

namespace {
void require_ring(const ModulePtr& m, const char* what) {
  if (m->ringoid()->num_objects() != 1)
    fail(Errc::bad_input, std::string(what) + ": one-object ringoid required");
}

ModulePtr regular_module(const RingoidPtr& r, Side side) { return representable(r, 0, side); }
}  // namespace

PurityResult is_pure_submodule(const ModuleMap& j) {
  if (!j.injective()) fail(Errc::not_mono, "is_pure_submodule: not a monomorphism");
  const ModulePtr& m = j.src;
  const ModulePtr& n = j.tgt;

  // oracle A: retraction search
  std::optional<ModuleMap> retraction;
  for (const ModuleMap& rho : hom_set(n, m)) {
    if (maps_equal(compose_maps(rho, j), ModuleMap::identity(m))) {
      retraction = rho;
      break;
    }
  }

  // oracle B: principal type of the image of a generating tuple
  SortedTuple gens = m->generator_tuple();
  PurityResult res;
  res.witness_tuple = gens;
  bool type_pure = true;
  std::optional<PpFormula> phi;
  if (gens.size() > 0) {
    SortedTuple jgens = j.apply_tuple(gens);
    phi = principal_type(jgens, n);
    type_pure = evaluate(*phi, m).contains(gens);
  }

  if (retraction.has_value() != type_pure)
    fail(Errc::internal, "purity oracles disagree (split vs principal type)");

  res.pure = type_pure;
  if (res.pure) {
    res.retraction = retraction;
  } else {
    res.witness_formula = phi;
  }
  return res;
}

PureEpiResult is_pure_epi(const ModuleMap& p) {
  if (!p.surjective()) fail(Errc::not_epi, "is_pure_epi: not surjective");
  const ModulePtr& b = p.src;
  const ModulePtr& c = p.tgt;
  SortedTuple cbar = c->generator_tuple();
  PureEpiResult res;
  if (cbar.size() == 0) {
    res.pure_epi = true;
    return res;
  }
  PpFormula phi = principal_type(cbar, c);
  EvaluatedSet sols = evaluate(phi, b);
  for (Int pos = 0; pos < sols.order(); ++pos) {
    SortedTuple bbar = sols.tuple_at(static_cast<std::size_t>(pos));
    if (p.apply_tuple(bbar) == cbar) {
      res.pure_epi = true;
      return res;
    }
  }
  res.pure_epi = false;
  res.failing_formula = phi;
  res.failing_tuple = cbar;
  return res;
}

FlatResult is_flat(const ModulePtr& m) {
  require_ring(m, "is_flat");
  if (m->side() != Side::right) fail(Errc::side_mismatch, "is_flat: right module expected");
  const RingoidPtr& r = m->ringoid();
  ModulePtr reg_left = regular_module(r, Side::left);
  TensorProduct t_full = tensor(m, reg_left);

  FlatResult res;
  for (const auto& parts : all_submodules(reg_left)) {
    SubmodulePart ideal = submodule_from_subgroups(reg_left, parts, "I");
    TensorProduct t_ideal = tensor(m, ideal.module);
    GroupHom induced = tensor_induced_left(t_ideal, t_full, ideal.incl);
    if (!induced.kernel_generators().empty()) {
      res.flat = false;
      res.failing_ideal = parts;
      return res;
    }
  }
  res.flat = true;
  return res;
}

bool flat_formula_check(const ModulePtr& m, const PpFormula& phi) {
  require_ring(m, "flat_formula_check");
  if (phi.num_free() != 1) fail(Errc::arity_error, "flat_formula_check: one free variable");
  EvaluatedSet lhs = evaluate(phi, m);
  LeftIdeal ideal = pp_ideal(phi);
  // M * phi(R): generated by a*r over fiber generators a and ideal generators r
  std::vector<Elem> gens;
  const FinAbGroup& fib = m->fiber(0);
  for (Int pos = 0; pos < ideal.parts[0].order(); ++pos) {
    Elem rc = ideal.parts[0].element(static_cast<std::size_t>(pos));
    GroupHom act = m->action(Morph{0, 0, rc});
    for (int i = 0; i < fib.rank(); ++i) {
      Elem e = fib.zero();
      e[static_cast<std::size_t>(i)] = 1;
      gens.push_back(act.apply(e));
    }
  }
  Subgroup rhs = Subgroup::generate(fib, std::move(gens));
  return lhs.sols.same_elements(rhs);
}

AbsPureResult is_absolutely_pure(const ModulePtr& m) {
  require_ring(m, "is_absolutely_pure");
  if (m->side() != Side::right) fail(Errc::side_mismatch, "is_absolutely_pure: right module");
  const RingoidPtr& r = m->ringoid();
  ModulePtr reg = regular_module(r, Side::right);
  const FinAbGroup& fib = m->fiber(0);

  AbsPureResult res;
  for (const auto& parts : all_submodules(reg)) {
    SubmodulePart ideal = submodule_from_subgroups(reg, parts, "I");
    // generators of the ideal inside R
    std::vector<Elem> igens_abs;
    std::vector<Elem> igens_r;
    const Presentation& pr = ideal.module->presentation();
    for (std::size_t u = 0; u < pr.gen_sorts.size(); ++u) {
      igens_abs.push_back(pr.gen_values[u]);
      igens_r.push_back(ideal.incl.apply(0, pr.gen_values[u]));
    }
    for (const ModuleMap& f : hom_set(ideal.module, m)) {
      // extension along I -> R exists iff some x in M has x * i = f(i) on generators
      bool extends = false;
      for (Int xi = 0; xi < fib.order() && !extends; ++xi) {
        Elem x = fib.element_at(xi);
        bool ok = true;
        for (std::size_t u = 0; u < igens_r.size() && ok; ++u) {
          Elem lhs = m->action(Morph{0, 0, igens_r[u]}).apply(x);
          Elem rhs = f.apply(0, igens_abs[u]);
          ok = fib.reduce(lhs) == fib.reduce(rhs);
        }
        extends = ok;
      }
      if (!extends) {
        res.absolutely_pure = false;
        res.failing_ideal = parts;
        res.failing_map = f;
        return res;
      }
    }
  }
  res.absolutely_pure = true;
  return res;
}

bool abspure_formula_check(const ModulePtr& m, const PpFormula& phi) {
  require_ring(m, "abspure_formula_check");
  if (phi.num_free() != 1) fail(Errc::arity_error, "abspure_formula_check: one free variable");
  if (phi.side != Side::right) fail(Errc::side_mismatch, "abspure_formula_check: right formula");
  EvaluatedSet lhs = evaluate(phi, m);
  PpFormula dphi = dual(phi);
  EvaluatedSet t = evaluate(dphi, regular_module(m->ringoid(), Side::left));
  // ann_M T for T = Dphi(R): annihilation is additive in t, generators suffice
  const FinAbGroup& fib = m->fiber(0);
  std::vector<Elem> ann;
  for (Int xi = 0; xi < fib.order(); ++xi) {
    Elem x = fib.element_at(xi);
    bool ok = true;
    for (const Elem& tg : t.sols.gens()) {
      if (!fib.is_zero(m->action(Morph{0, 0, tg}).apply(x))) {
        ok = false;
        break;
      }
    }
    if (ok) ann.push_back(std::move(x));
  }
  Subgroup rhs = Subgroup::generate(fib, std::move(ann));
  return lhs.sols.same_elements(rhs);
}

}  // namespace ppcalc
