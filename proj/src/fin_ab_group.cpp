#include "ppcalc/fin_ab_group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

#include "ppcalc/error.hpp"

namespace ppcalc {

namespace {
constexpr Int kMaxMaterialized = 1 << 22;

Int mod_reduce(Int v, Int m) {
  if (m <= 1) return 0;
  v %= m;
  if (v < 0) v += m;
  return v;
}
}  // namespace

FinAbGroup::FinAbGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
  strides_.resize(factors_.size());
  order_ = 1;
  for (int i = rank() - 1; i >= 0; --i) {
    if (factors_[i] < 1) fail(Errc::bad_input, "group factor must be >= 1");
    strides_[i] = order_;
    order_ *= factors_[i];
    if (order_ > (Int(1) << 40)) fail(Errc::size_limit, "group order exceeds limit");
  }
}

Elem FinAbGroup::reduce(Elem e) const {
  assert(static_cast<int>(e.size()) == rank());
  for (int i = 0; i < rank(); ++i) e[i] = mod_reduce(e[i], factors_[i]);
  return e;
}

Elem FinAbGroup::add(const Elem& x, const Elem& y) const {
  Elem r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = mod_reduce(x[i] + y[i], factors_[i]);
  return r;
}

Elem FinAbGroup::sub(const Elem& x, const Elem& y) const {
  Elem r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = mod_reduce(x[i] - y[i], factors_[i]);
  return r;
}

Elem FinAbGroup::neg(const Elem& x) const {
  Elem r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = mod_reduce(-x[i], factors_[i]);
  return r;
}

Elem FinAbGroup::scale(Int c, const Elem& x) const {
  Elem r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = mod_reduce(c * mod_reduce(x[i], factors_[i]), factors_[i]);
  return r;
}

bool FinAbGroup::is_zero(const Elem& x) const {
  for (int i = 0; i < rank(); ++i)
    if (mod_reduce(x[i], factors_[i]) != 0) return false;
  return true;
}

Int FinAbGroup::index_of(const Elem& e) const {
  Int idx = 0;
  for (int i = 0; i < rank(); ++i) idx += mod_reduce(e[i], factors_[i]) * strides_[i];
  return idx;
}

Elem FinAbGroup::element_at(Int idx) const {
  Elem e(rank());
  for (int i = 0; i < rank(); ++i) {
    e[i] = idx / strides_[i];
    idx %= strides_[i];
  }
  return e;
}

std::vector<Int> FinAbGroup::invariant_factors() const {
  IntMat diag(rank(), rank());
  for (int i = 0; i < rank(); ++i) diag.at(i, i) = factors_[i];
  SmithResult s = smith_normal_form(diag);
  std::vector<Int> out;
  for (int i = 0; i < s.diag_len(); ++i)
    if (s.diag(i) > 1) out.push_back(s.diag(i));
  return out;
}

FinAbGroup FinAbGroup::product(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Int> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return FinAbGroup(std::move(f));
}

std::string FinAbGroup::describe() const {
  std::vector<Int> inv = invariant_factors();
  if (inv.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << inv[i];
  }
  return os.str();
}

GroupHom GroupHom::zero(const FinAbGroup& s, const FinAbGroup& t) {
  GroupHom h;
  h.src = s;
  h.tgt = t;
  h.img.assign(s.rank(), t.zero());
  return h;
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
  GroupHom h;
  h.src = g;
  h.tgt = g;
  for (int i = 0; i < g.rank(); ++i) {
    Elem e = g.zero();
    e[i] = g.factor(i) > 1 ? 1 : 0;
    h.img.push_back(e);
  }
  return h;
}

Elem GroupHom::apply(const Elem& x) const {
  Elem r = tgt.zero();
  for (int i = 0; i < src.rank(); ++i) {
    if (x[i] == 0) continue;
    r = tgt.add(r, tgt.scale(x[i], img[i]));
  }
  return r;
}

bool GroupHom::well_defined() const {
  if (static_cast<int>(img.size()) != src.rank()) return false;
  for (int i = 0; i < src.rank(); ++i)
    if (!tgt.is_zero(tgt.scale(src.factor(i), img[i]))) return false;
  return true;
}

bool GroupHom::is_identity() const {
  if (!src.same_shape(tgt)) return false;
  return equal(identity(src));
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
  GroupHom h;
  h.src = inner.src;
  h.tgt = tgt;
  for (const Elem& e : inner.img) h.img.push_back(apply(e));
  return h;
}

GroupHom GroupHom::plus(const GroupHom& o) const {
  GroupHom h;
  h.src = src;
  h.tgt = tgt;
  for (std::size_t i = 0; i < img.size(); ++i) h.img.push_back(tgt.add(img[i], o.img[i]));
  return h;
}

GroupHom GroupHom::scaled(Int c) const {
  GroupHom h;
  h.src = src;
  h.tgt = tgt;
  for (const Elem& e : img) h.img.push_back(tgt.scale(c, e));
  return h;
}

bool GroupHom::equal(const GroupHom& o) const {
  if (!src.same_shape(o.src) || !tgt.same_shape(o.tgt)) return false;
  for (std::size_t i = 0; i < img.size(); ++i)
    if (tgt.reduce(img[i]) != o.tgt.reduce(o.img[i])) return false;
  return true;
}

std::vector<Elem> GroupHom::kernel_generators() const {
  // x in src with apply(x) = 0: integer rows (x, y) with x*M + y*diag(tgt) = 0
  const int b = src.rank(), c = tgt.rank();
  IntMat m(b + c, c);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = img[i][j];
  for (int j = 0; j < c; ++j) m.at(b + j, j) = tgt.factor(j);
  std::vector<Elem> out;
  for (const auto& row : left_kernel(m)) {
    Elem x(row.begin(), row.begin() + b);
    x = src.reduce(std::move(x));
    if (!src.is_zero(x)) out.push_back(x);
  }
  // the source factors themselves kill coordinates; those are implicit
  return out;
}

bool GroupHom::preimage(const Elem& b_in, Elem& out) const {
  const int b = src.rank(), c = tgt.rank();
  IntMat m(b + c, c);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = img[i][j];
  for (int j = 0; j < c; ++j) m.at(b + j, j) = tgt.factor(j);
  std::vector<Int> rhs(b_in.begin(), b_in.end());
  auto sol = solve_left(m, rhs);
  if (!sol) return false;
  Elem x(sol->begin(), sol->begin() + b);
  out = src.reduce(std::move(x));
  return true;
}

Subgroup Subgroup::generate(const FinAbGroup& ambient, std::vector<Elem> gens) {
  if (ambient.order() > kMaxMaterialized)
    fail(Errc::size_limit, "ambient group too large to materialize subgroup");
  Subgroup s;
  s.ambient_ = ambient;
  for (Elem& g : gens) s.gens_.push_back(ambient.reduce(std::move(g)));
  std::vector<bool> seen(static_cast<std::size_t>(ambient.order()), false);
  std::deque<Int> work;
  seen[0] = true;
  work.push_back(0);
  while (!work.empty()) {
    Int idx = work.front();
    work.pop_front();
    Elem cur = ambient.element_at(idx);
    for (const Elem& g : s.gens_) {
      Int nidx = ambient.index_of(ambient.add(cur, g));
      if (!seen[static_cast<std::size_t>(nidx)]) {
        seen[static_cast<std::size_t>(nidx)] = true;
        work.push_back(nidx);
      }
    }
  }
  for (Int i = 0; i < ambient.order(); ++i)
    if (seen[static_cast<std::size_t>(i)]) s.elems_.push_back(i);
  return s;
}

Subgroup Subgroup::zero(const FinAbGroup& ambient) { return generate(ambient, {}); }

Subgroup Subgroup::full(const FinAbGroup& ambient) {
  std::vector<Elem> gens;
  for (int i = 0; i < ambient.rank(); ++i) {
    Elem e = ambient.zero();
    if (ambient.factor(i) > 1) {
      e[i] = 1;
      gens.push_back(e);
    }
  }
  return generate(ambient, std::move(gens));
}

bool Subgroup::contains(const Elem& e) const { return contains_index(ambient_.index_of(e)); }

bool Subgroup::contains_index(Int idx) const {
  return std::binary_search(elems_.begin(), elems_.end(), idx);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

bool Subgroup::same_elements(const Subgroup& other) const { return elems_ == other.elems_; }

Subgroup::Abstract Subgroup::abstract_structure() const {
  Abstract ab;
  ab.gen_elems = gens_;
  const int t = static_cast<int>(gens_.size());
  const int k = ambient_.rank();
  // relation lattice of the generators inside the ambient group
  IntMat m(t + k, k);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = gens_[i][j];
  for (int j = 0; j < k; ++j) m.at(t + j, j) = ambient_.factor(j);
  std::vector<std::vector<Int>> rel;
  for (const auto& row : left_kernel(m)) rel.emplace_back(row.begin(), row.begin() + t);

  IntMat lat(static_cast<int>(rel.size()), t);
  for (int i = 0; i < lat.rows; ++i)
    for (int j = 0; j < t; ++j) lat.at(i, j) = rel[static_cast<std::size_t>(i)][j];
  SmithResult s = smith_normal_form(lat);

  std::vector<Int> fac;
  std::vector<int> kept;
  for (int j = 0; j < t; ++j) {
    Int d = j < s.diag_len() ? s.diag(j) : 0;
    if (d == 0) fail(Errc::internal, "subgroup relation lattice not full rank");
    if (d > 1) {
      fac.push_back(d);
      kept.push_back(j);
    }
  }
  ab.group = FinAbGroup(fac);
  // inclusion: abstract generator j (kept) corresponds to sum_i Vinv[j][i] * gens_[i]
  GroupHom incl;
  incl.src = ab.group;
  incl.tgt = ambient_;
  for (int idx = 0; idx < static_cast<int>(kept.size()); ++idx) {
    int j = kept[static_cast<std::size_t>(idx)];
    Elem acc = ambient_.zero();
    for (int i = 0; i < t; ++i)
      acc = ambient_.add(acc, ambient_.scale(s.vinv.at(j, i), gens_[i]));
    incl.img.push_back(acc);
  }
  ab.incl = std::move(incl);
  ab.kept = std::move(kept);
  // express: ambient elem -> gen coords x (solve) -> abstract coords (x * V) at kept positions
  ab.express_mat = s.v;
  return ab;
}

Elem Subgroup::Abstract::express(const Subgroup& owner, const Elem& ambient_elem) const {
  const auto& amb = owner.ambient();
  const int t = static_cast<int>(gen_elems.size());
  const int k = amb.rank();
  IntMat m(t + k, k);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = gen_elems[static_cast<std::size_t>(i)][j];
  for (int j = 0; j < k; ++j) m.at(t + j, j) = amb.factor(j);
  std::vector<Int> rhs(ambient_elem.begin(), ambient_elem.end());
  auto sol = solve_left(m, rhs);
  if (!sol) fail(Errc::internal, "express: element not in subgroup");
  std::vector<Int> xv(t, 0);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < t; ++i) xv[static_cast<std::size_t>(j)] += (*sol)[static_cast<std::size_t>(i)] * express_mat.at(i, j);
  Elem out = group.zero();
  for (int idx = 0; idx < static_cast<int>(kept.size()); ++idx)
    out[static_cast<std::size_t>(idx)] = xv[static_cast<std::size_t>(kept[static_cast<std::size_t>(idx)])];
  return group.reduce(std::move(out));
}

QuotientWithMaps quotient_by(const FinAbGroup& ambient, const std::vector<Elem>& subgens) {
  const int k = ambient.rank();
  const int g = static_cast<int>(subgens.size());
  IntMat lat(k + g, k);
  for (int j = 0; j < k; ++j) lat.at(j, j) = ambient.factor(j);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < k; ++j) lat.at(k + i, j) = subgens[static_cast<std::size_t>(i)][j];
  SmithResult s = smith_normal_form(lat);

  QuotientWithMaps q;
  q.ambient = ambient;
  std::vector<Int> fac;
  for (int j = 0; j < k; ++j) {
    Int d = j < s.diag_len() ? s.diag(j) : 0;
    if (d == 0) fail(Errc::internal, "quotient lattice not full rank");
    if (d > 1) {
      fac.push_back(d);
      q.kept.push_back(j);
    }
  }
  q.group = FinAbGroup(fac);
  q.vinv = s.vinv;
  GroupHom proj;
  proj.src = ambient;
  proj.tgt = q.group;
  for (int i = 0; i < k; ++i) {
    // proj(e_i) = (e_i * V) mod diag, kept positions
    Elem img = q.group.zero();
    for (int idx = 0; idx < static_cast<int>(q.kept.size()); ++idx) {
      int j = q.kept[static_cast<std::size_t>(idx)];
      img[static_cast<std::size_t>(idx)] = s.v.at(i, j);
    }
    proj.img.push_back(q.group.reduce(std::move(img)));
  }
  q.proj = std::move(proj);
  return q;
}

Elem QuotientWithMaps::lift(const Elem& q) const {
  const int k = ambient.rank();
  std::vector<Int> w(k, 0);
  for (int idx = 0; idx < static_cast<int>(kept.size()); ++idx)
    w[static_cast<std::size_t>(kept[static_cast<std::size_t>(idx)])] = q[static_cast<std::size_t>(idx)];
  Elem x(k, 0);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(j)] += w[static_cast<std::size_t>(i)] * vinv.at(i, j);
  return ambient.reduce(std::move(x));
}

std::vector<Elem> solve_homogeneous_gens(const LinearSystem& sys) {
  const ProductGroup& vars = *sys.vars;
  const int nv = static_cast<int>(vars.parts.size());
  const int ne = static_cast<int>(sys.eqs.size());
  const int b = vars.group.rank();
  int c = 0;
  std::vector<int> eq_off;
  for (const auto& e : sys.eqs) {
    eq_off.push_back(c);
    c += e.rank();
  }
  IntMat m(b + c, c);
  for (int i = 0; i < nv; ++i) {
    const int voff = vars.offset[static_cast<std::size_t>(i)];
    const int vrank = vars.parts[static_cast<std::size_t>(i)].rank();
    for (int j = 0; j < ne; ++j) {
      const GroupHom* h = sys.at(i, j);
      if (!h) continue;
      const int eoff = eq_off[static_cast<std::size_t>(j)];
      for (int a = 0; a < vrank; ++a)
        for (int k = 0; k < sys.eqs[static_cast<std::size_t>(j)].rank(); ++k)
          m.at(voff + a, eoff + k) = h->img[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
    }
  }
  for (int k = 0; k < c; ++k) {
    int j = 0;
    while (j + 1 < ne && eq_off[static_cast<std::size_t>(j + 1)] <= k) ++j;
    m.at(b + k, k) = sys.eqs[static_cast<std::size_t>(j)].factor(k - eq_off[static_cast<std::size_t>(j)]);
  }
  std::vector<Elem> gens;
  for (const auto& row : left_kernel(m)) {
    Elem x(row.begin(), row.begin() + b);
    x = vars.group.reduce(std::move(x));
    if (!vars.group.is_zero(x)) gens.push_back(std::move(x));
  }
  return gens;
}

std::vector<Elem> solve_homogeneous_enum(const LinearSystem& sys) {
  const ProductGroup& vars = *sys.vars;
  const int nv = static_cast<int>(vars.parts.size());
  const int ne = static_cast<int>(sys.eqs.size());
  if (vars.group.order() > kMaxMaterialized) fail(Errc::size_limit, "enumeration domain too large");
  std::vector<Elem> sols;
  for (Int idx = 0; idx < vars.group.order(); ++idx) {
    Elem flat = vars.group.element_at(idx);
    bool ok = true;
    for (int j = 0; j < ne && ok; ++j) {
      Elem acc = sys.eqs[static_cast<std::size_t>(j)].zero();
      for (int i = 0; i < nv; ++i) {
        const GroupHom* h = sys.at(i, j);
        if (!h) continue;
        acc = sys.eqs[static_cast<std::size_t>(j)].add(acc, h->apply(vars.part_of(flat, i)));
      }
      ok = sys.eqs[static_cast<std::size_t>(j)].is_zero(acc);
    }
    if (ok) sols.push_back(std::move(flat));
  }
  return sols;
}

ProductGroup::ProductGroup(std::vector<FinAbGroup> ps) : parts(std::move(ps)) {
  std::vector<Int> fac;
  for (const auto& p : parts) {
    offset.push_back(static_cast<int>(fac.size()));
    for (Int f : p.factors()) fac.push_back(f);
  }
  group = FinAbGroup(std::move(fac));
}

Elem ProductGroup::pack(const std::vector<Elem>& tuple) const {
  Elem out;
  out.reserve(static_cast<std::size_t>(group.rank()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Int v : tuple[i]) out.push_back(v);
  return group.reduce(std::move(out));
}

std::vector<Elem> ProductGroup::unpack(const Elem& flat) const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < parts.size(); ++i) out.push_back(part_of(flat, static_cast<int>(i)));
  return out;
}

Elem ProductGroup::part_of(const Elem& flat, int i) const {
  int off = offset[static_cast<std::size_t>(i)];
  int r = parts[static_cast<std::size_t>(i)].rank();
  return Elem(flat.begin() + off, flat.begin() + off + r);
}

}  // namespace ppcalc
