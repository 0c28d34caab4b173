#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ppcalc/dsl.hpp"
#include "ppcalc/duality.hpp"
#include "ppcalc/eliminations.hpp"
#include "ppcalc/error.hpp"
#include "ppcalc/fixtures.hpp"
#include "ppcalc/json_io.hpp"
#include "ppcalc/purity.hpp"
#include "ppcalc/report.hpp"
#include "ppcalc/suite.hpp"

using namespace ppcalc;

namespace {

struct Common {
  std::string ring = "z4";
  std::string side = "right";
  std::string json_out;
  std::string expect;  // "", "yes", "no"
  int bound_vars = 1;
  int bound_cols = 2;

  Side side_of() const { return side == "left" ? Side::left : Side::right; }
};

void add_common(CLI::App* cmd, Common& c, bool with_bounds = false) {
  cmd->add_option("--ring", c.ring, "ringoid fixture name or JSON path");
  cmd->add_option("--side", c.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  cmd->add_option("--json-out", c.json_out, "write a machine-readable report here");
  cmd->add_option("--expect", c.expect, "fail (exit 1) unless the decision matches")
      ->check(CLI::IsMember({"yes", "no"}));
  if (with_bounds) {
    cmd->add_option("--bound-vars", c.bound_vars, "search bound: bound variables");
    cmd->add_option("--bound-cols", c.bound_cols, "search bound: relation columns");
  }
}

int finish(const Common& c, Report& rep, std::chrono::steady_clock::time_point t0,
           bool decision_yes) {
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << rep.to_text();
  if (!c.json_out.empty()) write_json_report(rep, c.json_out);
  if (!c.expect.empty()) {
    bool want = c.expect == "yes";
    if (want != decision_yes) {
      std::cerr << "expectation not met\n";
      return 1;
    }
  }
  return 0;
}

std::string subgroup_str(const EvaluatedSet& ev) {
  std::ostringstream os;
  os << "{";
  Int shown = 0;
  for (Int pos = 0; pos < ev.order() && shown < 64; ++pos, ++shown) {
    if (pos) os << ", ";
    SortedTuple t = ev.tuple_at(static_cast<std::size_t>(pos));
    if (t.size() == 1 && t.entries[0].size() == 1) {
      os << t.entries[0][0];
    } else {
      os << "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t k = 0; k < t.entries[i].size(); ++k) {
          if (k) os << " ";
          os << t.entries[i][k];
        }
        os << "]";
      }
      os << ")";
    }
  }
  if (shown < ev.order()) os << ", ...";
  os << "}";
  return os.str();
}

SortedTuple parse_tuple(const std::string& text, const ModulePtr& m,
                        const std::string& sorts_text) {
  SortedTuple t;
  std::vector<std::string> sort_names;
  {
    std::istringstream is(sorts_text);
    std::string tok;
    while (std::getline(is, tok, ';'))
      if (!tok.empty()) sort_names.push_back(tok);
  }
  std::istringstream is(text);
  std::string elem;
  int idx = 0;
  while (std::getline(is, elem, ';')) {
    ObjId sort = 0;
    if (!sort_names.empty()) {
      auto o = m->ringoid()->object_by_name(sort_names[static_cast<std::size_t>(idx)]);
      if (!o) fail(Errc::bad_input, "unknown sort in --sorts");
      sort = *o;
    }
    Elem e;
    std::istringstream es(elem);
    std::string c;
    while (std::getline(es, c, ',')) e.push_back(std::stoll(c));
    t.sorts.push_back(sort);
    t.entries.push_back(m->fiber(sort).reduce(e));
    ++idx;
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pp-formula calculus over finite ringoids"};
  app.require_subcommand(1);

  Common c;
  std::string formula_text, formula2_text, module_name = "regular";
  std::string top_text, bottom_text, top2_text, bottom2_text, rho_text;
  std::string validate_path;
  std::string right_module = "regular", left_module = "regular";
  std::string r_tuple, s_tuple, tuple_sorts;
  std::string gens_text, generators_csv = "regular";
  std::string field = "f2";
  bool epi_mode = false;

  auto* validate = app.add_subcommand("validate", "validate a ringoid or module document");
  validate->add_option("path", validate_path, "JSON document")->required();
  add_common(validate, c);

  auto* eval = app.add_subcommand("eval", "evaluate a pp formula on a module");
  eval->add_option("--module", module_name, "module fixture or JSON path");
  eval->add_option("--formula", formula_text, "pp formula (DSL)")->required();
  add_common(eval, c);

  auto* dualc = app.add_subcommand("dual", "elementary dual of a pp formula");
  dualc->add_option("--formula", formula_text)->required();
  add_common(dualc, c);

  auto* impliesc = app.add_subcommand("implies", "decide psi <= phi");
  impliesc->add_option("--psi", formula_text)->required();
  impliesc->add_option("--phi", formula2_text)->required();
  add_common(impliesc, c);

  auto* equivc = app.add_subcommand("equiv", "decide equivalence of two pp formulas");
  equivc->add_option("--f1", formula_text)->required();
  equivc->add_option("--f2", formula2_text)->required();
  add_common(equivc, c);

  auto* idealc = app.add_subcommand("ideal", "left ideal defined by a right pp formula");
  idealc->add_option("--formula", formula_text)->required();
  add_common(idealc, c);

  auto* herzogc = app.add_subcommand("herzog", "Herzog criterion for r (x) s");
  herzogc->add_option("--right-module", right_module);
  herzogc->add_option("--left-module", left_module);
  herzogc->add_option("--r", r_tuple, "tuple from the right module, e.g. 1 or 1,0;2")->required();
  herzogc->add_option("--s", s_tuple, "tuple from the left module")->required();
  herzogc->add_option("--sorts", tuple_sorts, "tuple sorts, e.g. P;Q");
  add_common(herzogc, c);

  auto* purec = app.add_subcommand("pure", "purity of an inclusion / projection");
  purec->add_option("--module", module_name, "ambient module");
  purec->add_option("--gens", gens_text, "generators of the submodule (tuple syntax)")->required();
  purec->add_flag("--epi", epi_mode, "test the projection onto the quotient instead");
  add_common(purec, c);

  auto* flatc = app.add_subcommand("flat", "flatness of a module");
  flatc->add_option("--module", module_name);
  flatc->add_option("--formula", formula_text, "optional: check phi(M) = M*phi(R) only");
  add_common(flatc, c);

  auto* absc = app.add_subcommand("abspure", "absolute purity of a module");
  absc->add_option("--module", module_name);
  absc->add_option("--formula", formula_text, "optional: check phi(M) = ann_M Dphi(R) only");
  add_common(absc, c);

  auto* vnrc = app.add_subcommand("vnr", "von Neumann regularity of a ringoid");
  add_common(vnrc, c);

  auto* pairs = app.add_subcommand("pairs", "category of pp-pairs");
  pairs->require_subcommand(1);
  auto* pvalue = pairs->add_subcommand("value", "evaluate a pp-pair on a module");
  pvalue->add_option("--top", top_text)->required();
  pvalue->add_option("--bottom", bottom_text)->required();
  pvalue->add_option("--module", module_name);
  add_common(pvalue, c);
  auto* pmorph = pairs->add_subcommand("morphism-check", "validate a pp-definable morphism");
  pmorph->add_option("--rho", rho_text)->required();
  pmorph->add_option("--source-top", top_text)->required();
  pmorph->add_option("--source-bottom", bottom_text)->required();
  pmorph->add_option("--target-top", top2_text)->required();
  pmorph->add_option("--target-bottom", bottom2_text)->required();
  add_common(pmorph, c);
  auto* pkernel = pairs->add_subcommand("kernel", "kernel/image/cokernel pairs of a morphism");
  pkernel->add_option("--rho", rho_text)->required();
  pkernel->add_option("--source-top", top_text)->required();
  pkernel->add_option("--source-bottom", bottom_text)->required();
  pkernel->add_option("--target-top", top2_text)->required();
  pkernel->add_option("--target-bottom", bottom2_text)->required();
  add_common(pkernel, c);
  auto* pserre = pairs->add_subcommand("serre", "Serre membership for a definable subcategory");
  pserre->add_option("--top", top_text)->required();
  pserre->add_option("--bottom", bottom_text)->required();
  pserre->add_option("--generators", generators_csv, "comma-separated module fixtures");
  add_common(pserre, c);
  auto* ploc = pairs->add_subcommand("loc-iso", "isomorphism in the localized category");
  ploc->add_option("--top", top_text)->required();
  ploc->add_option("--bottom", bottom_text)->required();
  ploc->add_option("--top2", top2_text)->required();
  ploc->add_option("--bottom2", bottom2_text)->required();
  ploc->add_option("--generators", generators_csv, "comma-separated module fixtures");
  add_common(ploc, c, true);
  auto* pdemo = pairs->add_subcommand("demo-4-3", "the five-sort table over k[eps]");
  pdemo->add_option("--field", field)->check(CLI::IsMember({"f2", "f3"}));
  add_common(pdemo, c);

  auto* qec = app.add_subcommand("qe", "quantifier-free equivalent search");
  qec->add_option("--formula", formula_text)->required();
  add_common(qec, c, true);

  auto* embedc = app.add_subcommand("embed", "embed a pp-pair into a home sort");
  embedc->add_option("--top", top_text)->required();
  embedc->add_option("--bottom", bottom_text)->required();
  add_common(embedc, c, true);

  auto* harness = app.add_subcommand("vnr-harness", "Thm 5.2 sweep");
  add_common(harness, c, true);

  auto* demo = app.add_subcommand("demo-4-3", "the five-sort table over k[eps]");
  demo->add_option("--field", field)->check(CLI::IsMember({"f2", "f3"}));
  add_common(demo, c);

  auto* suitec = app.add_subcommand("suite", "run the full reproduction suite");
  add_common(suitec, c);

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();

  try {
    RingoidPtr ring = load_ringoid(c.ring);
    DslContext ctx{ring, c.side_of()};
    auto modload = [&](const std::string& n, Side s) { return load_module(n, ring, s); };
    auto pair_of = [&](const std::string& top, const std::string& bottom) {
      return make_pair(parse_formula(top, ctx), parse_formula(bottom, ctx));
    };

    if (*validate) {
      Report rep;
      rep.command = "validate";
      rep.add_input("path", validate_path);
      std::string text = read_file(validate_path);
      if (text.find("\"ringoid\"") != std::string::npos) {
        ModulePtr m = module_from_json_text(text);
        rep.decision = "valid module of order " + std::to_string(m->order());
      } else {
        RingoidPtr r2 = ringoid_from_json_text(text);
        rep.decision = "valid ringoid with " + std::to_string(r2->num_objects()) + " object(s)";
      }
      return finish(c, rep, t0, true);
    }
    if (*eval) {
      ModulePtr m = modload(module_name, c.side_of());
      PpFormula f = parse_formula(formula_text, DslContext{ring, m->side()});
      EvaluatedSet ev = evaluate(f, m);
      Report rep;
      rep.command = "eval";
      rep.add_input("ring", ring->name());
      rep.add_input("module", m->name());
      rep.add_input("formula", print_formula(f));
      rep.decision = "subgroup of order " + std::to_string(ev.order());
      rep.witnesses.push_back(subgroup_str(ev));
      return finish(c, rep, t0, ev.order() > 1);
    }
    if (*dualc) {
      PpFormula f = parse_formula(formula_text, ctx);
      PpFormula d = dual(f);
      Report rep;
      rep.command = "dual";
      rep.add_input("ring", ring->name());
      rep.add_input("formula", print_formula(f));
      rep.decision = print_formula(d);
      return finish(c, rep, t0, true);
    }
    if (*impliesc) {
      PpFormula psi = parse_formula(formula_text, ctx);
      PpFormula phi = parse_formula(formula2_text, ctx);
      ImpliesResult r = implies(psi, phi);
      Report rep;
      rep.command = "implies";
      rep.add_input("psi", print_formula(psi));
      rep.add_input("phi", print_formula(phi));
      rep.decision = r.holds ? "yes" : "no";
      if (!r.holds)
        rep.witnesses.push_back("counterexample module of order " +
                                std::to_string(r.counterexample.module->order()));
      return finish(c, rep, t0, r.holds);
    }
    if (*equivc) {
      PpFormula a = parse_formula(formula_text, ctx);
      PpFormula b = parse_formula(formula2_text, ctx);
      bool e = equivalent(a, b);
      Report rep;
      rep.command = "equiv";
      rep.add_input("f1", print_formula(a));
      rep.add_input("f2", print_formula(b));
      rep.decision = e ? "yes" : "no";
      return finish(c, rep, t0, e);
    }
    if (*idealc) {
      PpFormula f = parse_formula(formula_text, DslContext{ring, Side::right});
      LeftIdeal ideal = pp_ideal(f);
      Report rep;
      rep.command = "ideal";
      rep.add_input("formula", print_formula(f));
      std::ostringstream os;
      for (ObjId q = 0; q < ring->num_objects(); ++q)
        os << "part(" << ring->object_name(q) << ") order "
           << ideal.parts[static_cast<std::size_t>(q)].order() << "; ";
      rep.decision = os.str();
      for (const Morph& g : ideal.generators)
        rep.witnesses.push_back("generator " + ring->morph_name(g) + ": " +
                                ring->object_name(g.dom) + " -> " + ring->object_name(g.cod));
      return finish(c, rep, t0, true);
    }
    if (*herzogc) {
      ModulePtr m = modload(right_module, Side::right);
      ModulePtr n = modload(left_module, Side::left);
      SortedTuple rt = parse_tuple(r_tuple, m, tuple_sorts);
      SortedTuple st = parse_tuple(s_tuple, n, tuple_sorts);
      HerzogResult h = herzog_check(rt, m, st, n);
      Report rep;
      rep.command = "herzog";
      rep.add_input("right", m->name());
      rep.add_input("left", n->name());
      if (h.tensor_zero) {
        rep.decision = "tensor class is zero";
        rep.witnesses.push_back("witness " + print_formula(h.witness));
        rep.witnesses.push_back("dual " + print_formula(dual(h.witness)));
        rep.witnesses.push_back(h.memberships_verified ? "memberships verified"
                                                       : "MEMBERSHIP CHECK FAILED");
      } else {
        std::ostringstream os;
        os << "nonzero tensor class [";
        for (std::size_t i = 0; i < h.tensor_class.size(); ++i) {
          if (i) os << ",";
          os << h.tensor_class[i];
        }
        os << "] in " << h.tensor_group.describe();
        rep.decision = os.str();
      }
      return finish(c, rep, t0, h.tensor_zero);
    }
    if (*purec) {
      ModulePtr n = modload(module_name, Side::right);
      SortedTuple gens = parse_tuple(gens_text, n, tuple_sorts);
      std::vector<std::vector<Elem>> by_obj(static_cast<std::size_t>(n->num_objects()));
      for (std::size_t i = 0; i < gens.size(); ++i)
        by_obj[static_cast<std::size_t>(gens.sorts[i])].push_back(gens.entries[i]);
      std::vector<Subgroup> parts = close_under_action(n, by_obj);
      Report rep;
      bool yes;
      if (epi_mode) {
        QuotientPart q = quotient_by_subgroups(n, parts, "Q");
        PureEpiResult pe = is_pure_epi(q.proj);
        rep.command = "pure-epi";
        rep.decision = pe.pure_epi ? "pure epimorphism" : "not a pure epimorphism";
        if (!pe.pure_epi && pe.failing_formula)
          rep.witnesses.push_back("failing formula " + print_formula(*pe.failing_formula));
        yes = pe.pure_epi;
      } else {
        SubmodulePart sub = submodule_from_subgroups(n, parts, "M");
        PurityResult pr = is_pure_submodule(sub.incl);
        rep.command = "pure";
        rep.decision = pr.pure ? "pure submodule" : "not pure";
        if (!pr.pure && pr.witness_formula)
          rep.witnesses.push_back("witness formula " + print_formula(*pr.witness_formula));
        yes = pr.pure;
      }
      rep.add_input("module", n->name());
      rep.add_input("gens", gens_text);
      return finish(c, rep, t0, yes);
    }
    if (*flatc) {
      ModulePtr m = modload(module_name, Side::right);
      Report rep;
      rep.command = "flat";
      rep.add_input("module", m->name());
      bool yes;
      if (!formula_text.empty()) {
        PpFormula f = parse_formula(formula_text, DslContext{ring, Side::right});
        yes = flat_formula_check(m, f);
        rep.add_input("formula", print_formula(f));
        rep.decision = yes ? "phi(M) = M*phi(R)" : "phi(M) != M*phi(R)";
      } else {
        FlatResult fr = is_flat(m);
        yes = fr.flat;
        rep.decision = yes ? "flat" : "not flat";
        if (!yes && fr.failing_ideal)
          rep.witnesses.push_back("failing left ideal of order " +
                                  std::to_string((*fr.failing_ideal)[0].order()));
      }
      return finish(c, rep, t0, yes);
    }
    if (*absc) {
      ModulePtr m = modload(module_name, Side::right);
      Report rep;
      rep.command = "abspure";
      rep.add_input("module", m->name());
      bool yes;
      if (!formula_text.empty()) {
        PpFormula f = parse_formula(formula_text, DslContext{ring, Side::right});
        yes = abspure_formula_check(m, f);
        rep.add_input("formula", print_formula(f));
        rep.decision = yes ? "phi(M) = ann_M Dphi(R)" : "phi(M) != ann_M Dphi(R)";
      } else {
        AbsPureResult ar = is_absolutely_pure(m);
        yes = ar.absolutely_pure;
        rep.decision = yes ? "absolutely pure" : "not absolutely pure";
        if (!yes && ar.failing_ideal)
          rep.witnesses.push_back("failing right ideal of order " +
                                  std::to_string((*ar.failing_ideal)[0].order()));
      }
      return finish(c, rep, t0, yes);
    }
    if (*vnrc) {
      VnrResult v = is_von_neumann_regular(*ring);
      Report rep;
      rep.command = "vnr";
      rep.add_input("ring", ring->name());
      rep.decision = v.regular ? "von Neumann regular" : "not von Neumann regular";
      if (v.regular) {
        for (std::size_t i = 0; i < v.witnesses.size() && i < 8; ++i)
          rep.witnesses.push_back("r = " + ring->morph_name(v.witnesses[i].first) +
                                  " -> s = " + ring->morph_name(v.witnesses[i].second));
      } else if (v.counterexample) {
        rep.witnesses.push_back("counterexample r = " + ring->morph_name(*v.counterexample));
      }
      return finish(c, rep, t0, v.regular);
    }
    if (*pvalue) {
      PpPair p = pair_of(top_text, bottom_text);
      ModulePtr m = modload(module_name, p.top.side);
      PairValue pv = pair_value(p, m);
      Report rep;
      rep.command = "pairs value";
      rep.add_input("top", print_formula(p.top));
      rep.add_input("bottom", print_formula(p.bottom));
      rep.add_input("module", m->name());
      rep.decision = "group " + pv.group.describe() + " of order " + std::to_string(pv.order());
      return finish(c, rep, t0, pv.order() > 1);
    }
    if (*pmorph || *pkernel) {
      PpPair src = pair_of(top_text, bottom_text);
      PpPair tgt = pair_of(top2_text, bottom2_text);
      PpFormula rho = parse_formula(rho_text, ctx);
      Report rep;
      MorphismCheck mc = check_morphism(rho, src, tgt);
      if (*pmorph) {
        rep.command = "pairs morphism-check";
        rep.decision = mc.ok ? "valid pp morphism"
                             : "Rejected(" + std::to_string(mc.failed_condition) + ")";
        return finish(c, rep, t0, mc.ok);
      }
      rep.command = "pairs kernel";
      if (!mc.ok) {
        rep.decision = "Rejected(" + std::to_string(mc.failed_condition) + ")";
        return finish(c, rep, t0, false);
      }
      PpMorphism m{src, tgt, rho};
      KernelCokernelImage kci = kernel_cokernel_image(m);
      rep.decision = "kernel/image/cokernel computed";
      rep.witnesses.push_back("kernel top: " + print_formula(kci.kernel.top));
      rep.witnesses.push_back("image top: " + print_formula(kci.image.top));
      rep.witnesses.push_back("cokernel bottom: " + print_formula(kci.cokernel.bottom));
      return finish(c, rep, t0, true);
    }
    if (*pserre || *ploc) {
      std::vector<ModulePtr> gens;
      {
        std::istringstream is(generators_csv);
        std::string tok;
        while (std::getline(is, tok, ','))
          if (!tok.empty()) gens.push_back(modload(tok, c.side_of()));
      }
      if (*pserre) {
        PpPair p = pair_of(top_text, bottom_text);
        bool member = serre_membership(p, gens);
        Report rep;
        rep.command = "pairs serre";
        rep.add_input("top", print_formula(p.top));
        rep.add_input("bottom", print_formula(p.bottom));
        rep.decision = member ? "closed on the definable subcategory" : "open on some generator";
        return finish(c, rep, t0, member);
      }
      PpPair p = pair_of(top_text, bottom_text);
      PpPair q = pair_of(top2_text, bottom2_text);
      SearchBounds b;
      b.max_bound_vars = c.bound_vars;
      b.max_cols = c.bound_cols;
      LocalizedIsoResult lr = localized_iso(p, q, gens, b);
      Report rep;
      rep.command = "pairs loc-iso";
      switch (lr.kind) {
        case LocalizedIsoResult::Kind::iso:
          rep.decision = "Iso";
          rep.witnesses.push_back("rho: " + print_formula(lr.iso->rho));
          break;
        case LocalizedIsoResult::Kind::not_iso:
          rep.decision = "NotIso";
          rep.witnesses.push_back(lr.certificate);
          break;
        case LocalizedIsoResult::Kind::not_found: rep.decision = "NotFoundWithinBound"; break;
      }
      return finish(c, rep, t0, lr.kind == LocalizedIsoResult::Kind::iso);
    }
    if (*pdemo || *demo) {
      RingoidPtr fr = fixture_ringoid(field == "f2" ? "f2e" : "f3e");
      DslContext fctx{fr, Side::right};
      ModulePtr rs1 = fixture_module("r-plus-s1", fr, Side::right);
      ModulePtr reg = fixture_module("regular", fr, Side::right);
      PpFormula triv = trivial_formula(fr, Side::right, {0});
      PpFormula zero = zero_formula(fr, Side::right, {0});
      Morph eps{0, 0, Elem{0, 1}};
      PpFormula ann = annihilator_formula(fr, Side::right, 0, {eps});
      PpFormula div;
      {
        div.side = Side::right;
        div.ringoid = fr;
        div.free_sorts = {0};
        div.bound_sorts = {0};
        div.rel_sorts = {0};
        div.h.assign(2, {});
        div.h[0].push_back(fr->identity(0));
        div.h[1].push_back(fr->neg(eps));
        div.validate();
      }
      struct Row {
        const char* label;
        PpPair pair;
      };
      std::vector<Row> rows = {{"(x=x)/(x=0)", make_pair(triv, zero)},
                               {"(x*e=0)/(x=0)", make_pair(ann, zero)},
                               {"(e|x)/(x=0)", make_pair(div, zero)},
                               {"(x=x)/(e|x)", make_pair(triv, div)},
                               {"(x*e=0)/(e|x)", make_pair(ann, div)}};
      Report rep;
      rep.command = "demo-4-3";
      rep.add_input("field", field);
      std::ostringstream os;
      os << "sort evaluations on R+S1\n";
      for (const Row& row : rows) {
        PairValue pv = pair_value(row.pair, rs1);
        os << "  " << row.label << " -> order " << pv.order() << " (" << pv.group.describe()
           << ")\n";
      }
      os << "Serre members over D = <R>: ";
      std::vector<ModulePtr> gens{reg};
      for (const Row& row : rows)
        if (serre_membership(row.pair, gens)) os << row.label << " ";
      os << "\nlocalized isomorphisms among the middle three: ";
      SearchBounds b;
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          LocalizedIsoResult lr = localized_iso(rows[static_cast<std::size_t>(i)].pair,
                                                rows[static_cast<std::size_t>(j)].pair, gens, b);
          if (lr.kind == LocalizedIsoResult::Kind::iso)
            os << rows[static_cast<std::size_t>(i)].label << "->"
               << rows[static_cast<std::size_t>(j)].label << " ";
        }
      rep.decision = os.str();
      (void)fctx;
      return finish(c, rep, t0, true);
    }
    if (*qec) {
      PpFormula f = parse_formula(formula_text, ctx);
      QeResult q = qe_search(f, c.bound_cols);
      Report rep;
      rep.command = "qe";
      rep.add_input("formula", print_formula(f));
      switch (q.kind) {
        case QeResult::Kind::found:
          rep.decision = "QuantifierFree";
          rep.witnesses.push_back(print_formula(*q.quantifier_free));
          break;
        case QeResult::Kind::provably_none:
          rep.decision = "ProvablyNone";
          for (const PpFormula& ch : q.checked_classes)
            rep.witnesses.push_back("checked " + print_formula(ch));
          break;
        case QeResult::Kind::not_found: rep.decision = "NotFoundWithinBound"; break;
      }
      return finish(c, rep, t0, q.kind == QeResult::Kind::found);
    }
    if (*embedc) {
      PpPair p = pair_of(top_text, bottom_text);
      SearchBounds b;
      b.max_bound_vars = c.bound_vars;
      b.max_cols = c.bound_cols;
      EmbedResult e = embed_search(p, default_home_sorts(ring), b);
      Report rep;
      rep.command = "embed";
      rep.add_input("top", print_formula(p.top));
      rep.add_input("bottom", print_formula(p.bottom));
      switch (e.kind) {
        case EmbedResult::Kind::monic:
          rep.decision = "Monic";
          rep.witnesses.push_back("rho: " + print_formula(e.mono->rho));
          break;
        case EmbedResult::Kind::not_embeddable:
          rep.decision = "NotEmbeddable";
          rep.witnesses.push_back(e.certificate);
          break;
        case EmbedResult::Kind::not_found: rep.decision = "NotFoundWithinBound"; break;
      }
      return finish(c, rep, t0, e.kind == EmbedResult::Kind::monic);
    }
    if (*harness) {
      FamilyParams fp;
      fp.max_free = 2;
      fp.max_bound = 1;
      fp.max_cols = 1;
      fp.raw_cap_per_signature = 400;
      SearchBounds b;
      b.max_bound_vars = c.bound_vars;
      b.max_cols = c.bound_cols;
      Thm52Report rep52 = thm52_harness(ring, fp, b, 40);
      Report rep;
      rep.command = "vnr-harness";
      rep.add_input("ring", ring->name());
      std::ostringstream os;
      os << "VNR = " << (rep52.vnr ? "true" : "false") << "; formulas " << rep52.formulas
         << ": qe found/provably-none/not-found = " << rep52.qe_found << "/"
         << rep52.qe_provably_none << "/" << rep52.qe_not_found << "; pairs " << rep52.pairs
         << ": embed monic/not-found/not-embeddable = " << rep52.embed_monic << "/"
         << rep52.embed_not_found << "/" << rep52.embed_not_embeddable
         << (rep52.anomaly ? "; ANOMALY" : "");
      rep.decision = os.str();
      return finish(c, rep, t0, !rep52.anomaly);
    }
    if (*suitec) {
      auto results = run_acceptance(std::cout);
      int failures = 0;
      for (const auto& r : results)
        if (!r.pass) ++failures;
      std::cout << (failures == 0 ? "suite: all criteria passed\n"
                                  : "suite: " + std::to_string(failures) + " criteria failed\n");
      return failures == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case Errc::parse_error:
      case Errc::bad_input:
      case Errc::axiom_violation:
      case Errc::functoriality_violation:
      case Errc::naturality_violation:
      case Errc::size_limit: return 2;
      default: return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
