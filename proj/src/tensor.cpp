#include "ppcalc/tensor.hpp"

#include "ppcalc/error.hpp"

namespace ppcalc {

Elem TensorProduct::project(const std::vector<Int>& w) const {
  const int s = static_cast<int>(symbols.size());
  Elem out = group.zero();
  for (int idx = 0; idx < static_cast<int>(kept.size()); ++idx) {
    Int acc = 0;
    for (int i = 0; i < s; ++i) acc += w[static_cast<std::size_t>(i)] * v.at(i, kept[static_cast<std::size_t>(idx)]);
    out[static_cast<std::size_t>(idx)] = acc;
  }
  return group.reduce(std::move(out));
}

std::vector<Int> TensorProduct::lift(const Elem& cls) const {
  const int s = static_cast<int>(symbols.size());
  std::vector<Int> w(static_cast<std::size_t>(s), 0);
  std::vector<Int> full(static_cast<std::size_t>(s), 0);
  for (int idx = 0; idx < static_cast<int>(kept.size()); ++idx)
    full[static_cast<std::size_t>(kept[static_cast<std::size_t>(idx)])] = cls[static_cast<std::size_t>(idx)];
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < s; ++i) w[static_cast<std::size_t>(j)] += full[static_cast<std::size_t>(i)] * vinv.at(i, j);
  return w;
}

Elem TensorProduct::class_of_single(ObjId p, const Elem& me, const Elem& ne) const {
  std::vector<Int> w(symbols.size(), 0);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const Symbol& sym = symbols[i];
    if (sym.p != p) continue;
    w[i] = me[static_cast<std::size_t>(sym.a)] * ne[static_cast<std::size_t>(sym.b)];
  }
  return project(w);
}

Elem TensorProduct::class_of(const SortedTuple& r, const SortedTuple& s) const {
  if (r.sorts != s.sorts) fail(Errc::sort_mismatch, "tensor class: tuples must have matching sorts");
  Elem acc = group.zero();
  for (std::size_t i = 0; i < r.size(); ++i)
    acc = group.add(acc, class_of_single(r.sorts[i], r.entries[i], s.entries[i]));
  return acc;
}

TensorProduct tensor(const ModulePtr& m, const ModulePtr& n) {
  if (m->side() != Side::right || n->side() != Side::left)
    fail(Errc::side_mismatch, "tensor: need (right, left)");
  if (m->ringoid() != n->ringoid() && !structurally_equal(*m->ringoid(), *n->ringoid()))
    fail(Errc::sort_mismatch, "tensor: different ringoids");
  const RingoidPtr& r = m->ringoid();
  const int nobj = r->num_objects();

  TensorProduct t;
  t.m_right = m;
  t.n_left = n;
  for (ObjId p = 0; p < nobj; ++p)
    for (int a = 0; a < m->fiber(p).rank(); ++a)
      for (int b = 0; b < n->fiber(p).rank(); ++b) t.symbols.push_back({p, a, b});
  const int s = static_cast<int>(t.symbols.size());
  auto sym_index = [&](ObjId p, int a, int b) -> int {
    for (int i = 0; i < s; ++i)
      if (t.symbols[static_cast<std::size_t>(i)].p == p && t.symbols[static_cast<std::size_t>(i)].a == a &&
          t.symbols[static_cast<std::size_t>(i)].b == b)
        return i;
    fail(Errc::internal, "tensor symbol lookup");
  };

  std::vector<std::vector<Int>> rows;
  // coefficient orders
  for (int i = 0; i < s; ++i) {
    const auto& sym = t.symbols[static_cast<std::size_t>(i)];
    std::vector<Int> row(static_cast<std::size_t>(s), 0);
    row[static_cast<std::size_t>(i)] = m->fiber(sym.p).factor(sym.a);
    rows.push_back(row);
    row[static_cast<std::size_t>(i)] = n->fiber(sym.p).factor(sym.b);
    rows.push_back(std::move(row));
  }
  // balance relations over hom-group generators (additive in r, m, n, so
  // generator triples suffice)
  for (ObjId p = 0; p < nobj; ++p)
    for (ObjId q = 0; q < nobj; ++q)
      for (int g = 0; g < r->hom(p, q).rank(); ++g) {
        const GroupHom& am = m->gen_action(p, q, g);  // M(q) -> M(p)
        const GroupHom& an = n->gen_action(p, q, g);  // N(p) -> N(q)
        for (int a = 0; a < m->fiber(q).rank(); ++a)
          for (int b = 0; b < n->fiber(p).rank(); ++b) {
            std::vector<Int> row(static_cast<std::size_t>(s), 0);
            const Elem& c = am.img[static_cast<std::size_t>(a)];  // in M(p)
            for (int a2 = 0; a2 < m->fiber(p).rank(); ++a2)
              if (c[static_cast<std::size_t>(a2)] != 0)
                row[static_cast<std::size_t>(sym_index(p, a2, b))] += c[static_cast<std::size_t>(a2)];
            const Elem& f = an.img[static_cast<std::size_t>(b)];  // in N(q)
            for (int b2 = 0; b2 < n->fiber(q).rank(); ++b2)
              if (f[static_cast<std::size_t>(b2)] != 0)
                row[static_cast<std::size_t>(sym_index(q, a, b2))] -= f[static_cast<std::size_t>(b2)];
            bool nonzero = false;
            for (Int x : row)
              if (x != 0) nonzero = true;
            if (nonzero) rows.push_back(std::move(row));
          }
      }

  IntMat lat(static_cast<int>(rows.size()), s);
  for (int i = 0; i < lat.rows; ++i)
    for (int j = 0; j < s; ++j) lat.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  SmithResult snf = smith_normal_form(lat);
  std::vector<Int> fac;
  for (int j = 0; j < s; ++j) {
    Int d = j < snf.diag_len() ? snf.diag(j) : 0;
    if (d == 0) fail(Errc::internal, "tensor lattice not full rank");
    if (d > 1) {
      fac.push_back(d);
      t.kept.push_back(j);
    }
  }
  t.group = FinAbGroup(fac);
  t.v = snf.v;
  t.vinv = snf.vinv;
  return t;
}

GroupHom tensor_induced_left(const TensorProduct& src, const TensorProduct& tgt,
                             const ModuleMap& g) {
  GroupHom h;
  h.src = src.group;
  h.tgt = tgt.group;
  for (int idx = 0; idx < h.src.rank(); ++idx) {
    Elem e = h.src.zero();
    e[static_cast<std::size_t>(idx)] = 1;
    std::vector<Int> w = src.lift(e);
    Elem acc = tgt.group.zero();
    for (std::size_t i = 0; i < src.symbols.size(); ++i) {
      if (w[i] == 0) continue;
      const auto& sym = src.symbols[i];
      Elem ma = src.m_right->fiber(sym.p).zero();
      ma[static_cast<std::size_t>(sym.a)] = 1;
      Elem nb = src.n_left->fiber(sym.p).zero();
      nb[static_cast<std::size_t>(sym.b)] = 1;
      Elem img = tgt.class_of_single(sym.p, ma, g.apply(sym.p, nb));
      acc = tgt.group.add(acc, tgt.group.scale(w[i], img));
    }
    h.img.push_back(std::move(acc));
  }
  return h;
}

}  // namespace ppcalc
