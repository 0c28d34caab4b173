#include "ppcalc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ppcalc/error.hpp"
#include "ppcalc/fixtures.hpp"

namespace ppcalc {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_input, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "invalid JSON document");
  return j;
}

std::vector<Int> int_list(const json& j) {
  std::vector<Int> out;
  for (const auto& v : j) out.push_back(v.get<Int>());
  return out;
}

}  // namespace

RingoidPtr ringoid_from_json_text(const std::string& text) {
  json j = parse_json(text);
  Ringoid::Spec spec;
  if (!j.contains("objects")) fail(Errc::parse_error, "ringoid document: missing objects");
  for (const auto& o : j["objects"]) spec.objects.push_back(o.get<std::string>());
  if (j.contains("name")) spec.name = j["name"].get<std::string>();
  auto obj_id = [&](const std::string& n) -> ObjId {
    for (std::size_t i = 0; i < spec.objects.size(); ++i)
      if (spec.objects[i] == n) return static_cast<ObjId>(i);
    fail(Errc::parse_error, "ringoid document: unknown object " + n);
  };
  struct GenRef {
    ObjId dom, cod;
    int index;
  };
  std::map<std::string, GenRef> gens;
  if (j.contains("homs"))
    for (const auto& h : j["homs"]) {
      ObjId d = obj_id(h["dom"].get<std::string>());
      ObjId c = obj_id(h["cod"].get<std::string>());
      spec.homs[{d, c}] = int_list(h["factors"]);
      std::vector<std::string> names;
      if (h.contains("gens")) {
        for (const auto& g : h["gens"]) names.push_back(g.get<std::string>());
      } else {
        for (std::size_t i = 0; i < spec.homs[{d, c}].size(); ++i)
          names.push_back("g" + std::to_string(i));
      }
      if (names.size() != spec.homs[{d, c}].size())
        fail(Errc::parse_error, "ringoid document: gens/factors length mismatch");
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (gens.count(names[i]))
          fail(Errc::parse_error, "ringoid document: duplicate generator name " + names[i]);
        gens[names[i]] = GenRef{d, c, static_cast<int>(i)};
      }
      spec.gen_names[{d, c}] = names;
    }
  if (j.contains("compose"))
    for (const auto& c : j["compose"]) {
      const auto& gname = c["g"].get<std::string>();
      const auto& fname = c["f"].get<std::string>();
      if (!gens.count(gname) || !gens.count(fname))
        fail(Errc::parse_error, "ringoid document: compose references unknown generator");
      GenRef g = gens[gname], f = gens[fname];
      if (f.cod != g.dom) fail(Errc::parse_error, "ringoid document: compose not composable");
      auto key = std::make_tuple(f.dom, f.cod, g.cod);
      auto& table = spec.compose[key];
      std::size_t grank = spec.homs.count({g.dom, g.cod}) ? spec.homs[{g.dom, g.cod}].size() : 0;
      std::size_t frank = spec.homs.count({f.dom, f.cod}) ? spec.homs[{f.dom, f.cod}].size() : 0;
      std::size_t orank = spec.homs.count({f.dom, g.cod}) ? spec.homs[{f.dom, g.cod}].size() : 0;
      if (table.empty())
        table.assign(grank, std::vector<Elem>(frank, Elem(orank, 0)));
      table[static_cast<std::size_t>(g.index)][static_cast<std::size_t>(f.index)] =
          int_list(c["result"]);
    }
  if (j.contains("identities"))
    for (const auto& idn : j["identities"]) {
      ObjId p = obj_id(idn["object"].get<std::string>());
      if (static_cast<std::size_t>(p) >= spec.identities.size())
        spec.identities.resize(static_cast<std::size_t>(p) + 1);
      spec.identities[static_cast<std::size_t>(p)] = int_list(idn["coords"]);
    }
  spec.identities.resize(spec.objects.size());
  for (std::size_t p = 0; p < spec.objects.size(); ++p)
    if (spec.identities[p].empty() && spec.homs.count({static_cast<ObjId>(p), static_cast<ObjId>(p)}))
      fail(Errc::parse_error, "ringoid document: missing identity for object " + spec.objects[p]);
  return Ringoid::build(std::move(spec));
}

RingoidPtr load_ringoid(const std::string& name_or_path) {
  if (is_fixture_ringoid_name(name_or_path)) return fixture_ringoid(name_or_path);
  return ringoid_from_json_text(read_file(name_or_path));
}

ModulePtr module_from_json_text(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("ringoid")) fail(Errc::parse_error, "module document: missing ringoid");
  RingoidPtr r = load_ringoid(j["ringoid"].get<std::string>());
  Side side = Side::right;
  if (j.contains("side")) {
    std::string s = j["side"].get<std::string>();
    if (s == "left")
      side = Side::left;
    else if (s == "right")
      side = Side::right;
    else
      fail(Errc::parse_error, "module document: side must be left or right");
  }
  const int n = r->num_objects();
  std::vector<FinAbGroup> fibers(static_cast<std::size_t>(n));
  auto obj_id = [&](const std::string& nm) -> ObjId {
    auto o = r->object_by_name(nm);
    if (!o) fail(Errc::parse_error, "module document: unknown object " + nm);
    return *o;
  };
  if (j.contains("fibers"))
    for (const auto& f : j["fibers"])
      fibers[static_cast<std::size_t>(obj_id(f["object"].get<std::string>()))] =
          FinAbGroup(int_list(f["factors"]));
  Module::Actions actions(static_cast<std::size_t>(n) * n);
  for (ObjId p = 0; p < n; ++p)
    for (ObjId q = 0; q < n; ++q) {
      auto& out = actions[static_cast<std::size_t>(p) * n + q];
      const FinAbGroup& src = side == Side::right ? fibers[static_cast<std::size_t>(q)]
                                                  : fibers[static_cast<std::size_t>(p)];
      const FinAbGroup& tgt = side == Side::right ? fibers[static_cast<std::size_t>(p)]
                                                  : fibers[static_cast<std::size_t>(q)];
      for (int g = 0; g < r->hom(p, q).rank(); ++g) out.push_back(GroupHom::zero(src, tgt));
    }
  if (j.contains("actions"))
    for (const auto& a : j["actions"]) {
      auto gen = r->named_generator(a["gen"].get<std::string>());
      if (!gen) fail(Errc::parse_error, "module document: unknown generator");
      // locate generator index
      const FinAbGroup& hg = r->hom(gen->dom, gen->cod);
      int gi = -1;
      for (int i = 0; i < hg.rank(); ++i)
        if (gen->coeffs[static_cast<std::size_t>(i)] == 1) gi = i;
      GroupHom h;
      h.src = side == Side::right ? fibers[static_cast<std::size_t>(gen->cod)]
                                  : fibers[static_cast<std::size_t>(gen->dom)];
      h.tgt = side == Side::right ? fibers[static_cast<std::size_t>(gen->dom)]
                                  : fibers[static_cast<std::size_t>(gen->cod)];
      for (const auto& row : a["matrix"]) h.img.push_back(h.tgt.reduce(int_list(row)));
      if (static_cast<int>(h.img.size()) != h.src.rank())
        fail(Errc::parse_error, "module document: action matrix row count");
      actions[static_cast<std::size_t>(gen->dom) * n + gen->cod][static_cast<std::size_t>(gi)] =
          std::move(h);
    }
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "module";
  return Module::build(r, side, std::move(fibers), std::move(actions), name);
}

ModulePtr load_module(const std::string& name_or_path, const RingoidPtr& r, Side side) {
  if (name_or_path.find(".json") != std::string::npos) {
    ModulePtr m = module_from_json_text(read_file(name_or_path));
    if (m->side() != side) fail(Errc::side_mismatch, "module document has the wrong side");
    return m;
  }
  return fixture_module(name_or_path, r, side);
}

}  // namespace ppcalc
