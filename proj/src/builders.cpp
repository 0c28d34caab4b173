#include "ppcalc/builders.hpp"

#include <algorithm>
#include <map>

#include "ppcalc/error.hpp"

namespace ppcalc {

RingoidPtr make_zn(Int n, const std::string& name) {
  if (n < 1) fail(Errc::bad_input, "make_zn: n must be >= 1");
  Ringoid::Spec spec;
  spec.name = name.empty() ? "z" + std::to_string(n) : name;
  spec.objects = {"*"};
  spec.homs[{0, 0}] = {n};
  spec.gen_names[{0, 0}] = {"1"};
  spec.compose[{0, 0, 0}] = {{Elem{1}}};
  spec.identities = {Elem{1}};
  return Ringoid::build(std::move(spec));
}

RingoidPtr make_poly_quotient(Int p, const std::vector<Int>& lower, const std::string& var_name,
                              const std::string& name) {
  const int d = static_cast<int>(lower.size());
  if (p < 2 || d < 1) fail(Errc::bad_input, "make_poly_quotient: need p >= 2 and deg >= 1");
  Ringoid::Spec spec;
  spec.name = name;
  spec.objects = {"*"};
  spec.homs[{0, 0}] = std::vector<Int>(static_cast<std::size_t>(d), p);
  std::vector<std::string> names = {"1"};
  for (int i = 1; i < d; ++i)
    names.push_back(i == 1 ? var_name : var_name + std::to_string(i));
  spec.gen_names[{0, 0}] = names;

  // multiply X^i * X^j and reduce modulo f = X^d + sum lower[i] X^i
  auto reduce_pow = [&](int e) {
    std::vector<Int> poly(static_cast<std::size_t>(e) + 1, 0);
    poly[static_cast<std::size_t>(e)] = 1;
    for (int k = static_cast<int>(poly.size()) - 1; k >= d; --k) {
      Int c = poly[static_cast<std::size_t>(k)] % p;
      poly[static_cast<std::size_t>(k)] = 0;
      if (c == 0) continue;
      for (int i = 0; i < d; ++i) {
        Int v = poly[static_cast<std::size_t>(k - d + i)] - c * lower[static_cast<std::size_t>(i)];
        poly[static_cast<std::size_t>(k - d + i)] = ((v % p) + p) % p;
      }
    }
    Elem out(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(i)] % p;
    return out;
  };

  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(d),
                                       std::vector<Elem>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = reduce_pow(i + j);
  spec.compose[{0, 0, 0}] = std::move(table);
  Elem one(static_cast<std::size_t>(d), 0);
  one[0] = 1;
  spec.identities = {one};
  return Ringoid::build(std::move(spec));
}

RingoidPtr make_ring_product(const RingoidPtr& a, const RingoidPtr& b, const std::string& name) {
  if (a->num_objects() != 1 || b->num_objects() != 1)
    fail(Errc::bad_input, "make_ring_product: one-object ringoids only");
  const FinAbGroup& ha = a->hom(0, 0);
  const FinAbGroup& hb = b->hom(0, 0);
  Ringoid::Spec spec;
  spec.name = name;
  spec.objects = {"*"};
  std::vector<Int> fac = ha.factors();
  fac.insert(fac.end(), hb.factors().begin(), hb.factors().end());
  spec.homs[{0, 0}] = fac;
  std::vector<std::string> names;
  for (const auto& n : a->gen_names(0, 0)) names.push_back("u" + n);
  for (const auto& n : b->gen_names(0, 0)) names.push_back("v" + n);
  spec.gen_names[{0, 0}] = names;

  const int ra = ha.rank(), rb = hb.rank();
  auto embed = [&](const Elem& ea, const Elem& eb) {
    Elem out;
    out.insert(out.end(), ea.begin(), ea.end());
    out.insert(out.end(), eb.begin(), eb.end());
    return out;
  };
  std::vector<std::vector<Elem>> table(
      static_cast<std::size_t>(ra + rb),
      std::vector<Elem>(static_cast<std::size_t>(ra + rb),
                        Elem(static_cast<std::size_t>(ra + rb), 0)));
  for (int g = 0; g < ra + rb; ++g)
    for (int f = 0; f < ra + rb; ++f) {
      if (g < ra && f < ra) {
        Morph mg{0, 0, ha.zero()}, mf{0, 0, ha.zero()};
        mg.coeffs[static_cast<std::size_t>(g)] = 1;
        mf.coeffs[static_cast<std::size_t>(f)] = 1;
        table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
            embed(a->compose(mg, mf).coeffs, hb.zero());
      } else if (g >= ra && f >= ra) {
        Morph mg{0, 0, hb.zero()}, mf{0, 0, hb.zero()};
        mg.coeffs[static_cast<std::size_t>(g - ra)] = 1;
        mf.coeffs[static_cast<std::size_t>(f - ra)] = 1;
        table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
            embed(ha.zero(), b->compose(mg, mf).coeffs);
      }
      // cross terms are zero
    }
  spec.compose[{0, 0, 0}] = std::move(table);
  spec.identities = {embed(a->identity(0).coeffs, b->identity(0).coeffs)};
  return Ringoid::build(std::move(spec));
}

RingoidPtr make_matrix_ring(const RingoidPtr& base, int n, const std::string& name) {
  if (base->num_objects() != 1) fail(Errc::bad_input, "make_matrix_ring: one-object base only");
  if (n < 1) fail(Errc::bad_input, "make_matrix_ring: n >= 1");
  const FinAbGroup& h = base->hom(0, 0);
  const int r = h.rank();
  Ringoid::Spec spec;
  spec.name = name;
  spec.objects = {"*"};
  std::vector<Int> fac;
  std::vector<std::string> names;
  // cell (i,j) holds a copy of the base hom group; generator E_ij * g
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int g = 0; g < r; ++g) {
        fac.push_back(h.factor(g));
        std::string gn = base->gen_names(0, 0)[static_cast<std::size_t>(g)];
        std::string cell = "e" + std::to_string(i + 1) + std::to_string(j + 1);
        names.push_back(gn == "1" ? cell : cell + gn);
      }
  spec.homs[{0, 0}] = fac;
  spec.gen_names[{0, 0}] = names;

  auto idx = [&](int i, int j, int g) { return (i * n + j) * r + g; };
  const int total = n * n * r;
  std::vector<std::vector<Elem>> table(
      static_cast<std::size_t>(total),
      std::vector<Elem>(static_cast<std::size_t>(total), Elem(static_cast<std::size_t>(total), 0)));
  // (E_ab x) o (E_cd y) = delta_{bc} E_ad (x o y)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int gx = 0; gx < r; ++gx)
            for (int gy = 0; gy < r; ++gy) {
              if (b != c) continue;
              Morph mx{0, 0, h.zero()}, my{0, 0, h.zero()};
              mx.coeffs[static_cast<std::size_t>(gx)] = 1;
              my.coeffs[static_cast<std::size_t>(gy)] = 1;
              Elem prod = base->compose(mx, my).coeffs;
              Elem& cellv = table[static_cast<std::size_t>(idx(a, b, gx))]
                                 [static_cast<std::size_t>(idx(c, d, gy))];
              for (int g = 0; g < r; ++g)
                cellv[static_cast<std::size_t>(idx(a, d, g))] = prod[static_cast<std::size_t>(g)];
            }
  spec.compose[{0, 0, 0}] = std::move(table);
  Elem one(static_cast<std::size_t>(total), 0);
  Elem base_one = base->identity(0).coeffs;
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < r; ++g)
      one[static_cast<std::size_t>(idx(i, i, g))] = base_one[static_cast<std::size_t>(g)];
  spec.identities = {one};
  return Ringoid::build(std::move(spec));
}

namespace {

struct Path {
  std::vector<int> arrows;  // arrow ids, first-applied first
  int from, to;
};

bool contains_subpath(const std::vector<int>& path, const std::vector<int>& sub) {
  if (sub.empty() || sub.size() > path.size()) return false;
  for (std::size_t i = 0; i + sub.size() <= path.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < sub.size(); ++j)
      if (path[i + j] != sub[j]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

}  // namespace

RingoidPtr make_path_category(const QuiverSpec& qs) {
  const int nv = static_cast<int>(qs.vertices.size());
  if (nv == 0) fail(Errc::bad_input, "quiver needs vertices");
  auto vid = [&](const std::string& v) -> int {
    for (int i = 0; i < nv; ++i)
      if (qs.vertices[static_cast<std::size_t>(i)] == v) return i;
    fail(Errc::bad_input, "unknown vertex " + v);
  };
  std::vector<std::pair<int, int>> arrow_ends;
  std::vector<std::string> arrow_names;
  for (const auto& a : qs.arrows) {
    arrow_ends.emplace_back(vid(a.from), vid(a.to));
    arrow_names.push_back(a.name);
  }
  auto aid = [&](const std::string& n) -> int {
    for (std::size_t i = 0; i < arrow_names.size(); ++i)
      if (arrow_names[i] == n) return static_cast<int>(i);
    fail(Errc::bad_input, "unknown arrow " + n);
  };
  std::vector<std::vector<int>> rels;
  for (const auto& r : qs.zero_relations) {
    std::vector<int> rel;
    for (const auto& an : r) rel.push_back(aid(an));
    rels.push_back(std::move(rel));
  }

  // enumerate nonzero paths by length, shortest first
  std::vector<Path> paths;
  for (int v = 0; v < nv; ++v) paths.push_back(Path{{}, v, v});  // identities
  std::size_t frontier_begin = 0;
  constexpr std::size_t kMaxPaths = 4096;
  while (frontier_begin < paths.size()) {
    std::size_t frontier_end = paths.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (std::size_t a = 0; a < arrow_ends.size(); ++a) {
        if (arrow_ends[a].first != paths[i].to) continue;
        Path np = paths[i];
        np.arrows.push_back(static_cast<int>(a));
        np.to = arrow_ends[a].second;
        bool dead = false;
        for (const auto& rel : rels)
          if (contains_subpath(np.arrows, rel)) {
            dead = true;
            break;
          }
        if (!dead) {
          paths.push_back(std::move(np));
          if (paths.size() > kMaxPaths)
            fail(Errc::size_limit, "path category is too large (add relations?)");
        }
      }
    }
    frontier_begin = frontier_end;
  }

  // group paths by (from, to)
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_pair;
  for (std::size_t i = 0; i < paths.size(); ++i)
    by_pair[{paths[i].from, paths[i].to}].push_back(i);

  auto path_name = [&](const Path& p) -> std::string {
    if (p.arrows.empty()) return "1";
    std::string n;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
      if (!n.empty()) n += "_";
      n += arrow_names[static_cast<std::size_t>(*it)];
    }
    return n;
  };

  Ringoid::Spec spec;
  spec.name = qs.name;
  spec.objects = qs.vertices;
  for (const auto& [pq, list] : by_pair) {
    spec.homs[{pq.first, pq.second}] =
        std::vector<Int>(list.size(), qs.p);
    std::vector<std::string> names;
    for (std::size_t i : list) names.push_back(path_name(paths[i]));
    spec.gen_names[{pq.first, pq.second}] = names;
  }
  // composition: concatenate, zero if killed or not present (cap guarantees presence)
  for (const auto& [pq1, list1] : by_pair)
    for (const auto& [pq2, list2] : by_pair) {
      if (pq1.second != pq2.first) continue;
      const int p0 = pq1.first, q0 = pq1.second, s0 = pq2.second;
      std::vector<std::vector<Elem>> table(
          list2.size(), std::vector<Elem>(list1.size(),
                                          Elem(by_pair.count({p0, s0}) ? by_pair[{p0, s0}].size() : 0, 0)));
      auto& outlist = by_pair[{p0, s0}];
      for (std::size_t g = 0; g < list2.size(); ++g)
        for (std::size_t f = 0; f < list1.size(); ++f) {
          std::vector<int> cat = paths[list1[f]].arrows;
          const auto& tail = paths[list2[g]].arrows;
          cat.insert(cat.end(), tail.begin(), tail.end());
          bool dead = false;
          for (const auto& rel : rels)
            if (contains_subpath(cat, rel)) {
              dead = true;
              break;
            }
          if (dead) continue;
          // find the concatenated path among nonzero paths
          bool found = false;
          for (std::size_t oi = 0; oi < outlist.size(); ++oi)
            if (paths[outlist[oi]].arrows == cat) {
              table[g][f][oi] = 1;
              found = true;
              break;
            }
          if (!found) fail(Errc::internal, "path concatenation missing from enumeration");
        }
      spec.compose[{p0, q0, s0}] = std::move(table);
    }
  for (int v = 0; v < nv; ++v) {
    auto& list = by_pair[{v, v}];
    Elem one(list.size(), 0);
    for (std::size_t i = 0; i < list.size(); ++i)
      if (paths[list[i]].arrows.empty()) one[i] = 1;
    spec.identities.push_back(one);
  }
  return Ringoid::build(std::move(spec));
}

}  // namespace ppcalc
