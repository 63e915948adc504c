#include "pivctr/center.hpp"

namespace pivctr {

CenterObject unit_center(const Cat& C) {
  CenterObject u;
  u.carrier = C.unit_obj();
  for (int i = 0; i < C.n(); ++i) u.hb.push_back(C.id(C.simple(i)));
  return u;
}

Morphism half_braiding(const Cat& C, const CenterObject& v, const Obj& w) {
  Obj V = v.carrier;
  Morphism r = C.zero(C.tensor(V, w), C.tensor(w, V));
  Morphism idV = C.id(V);
  for (int k = 0; k < C.n(); ++k)
    for (int c = 0; c < w.mult[k]; ++c)
      r = r + C.tensor(C.incl(w, k, c), idV) * v.hb[k] * C.tensor(idV, C.proj(w, k, c));
  return r;
}

Arrow half_braiding(const Cat& C, const CenterObject& v, const Term& t) {
  Term V = C.leaf(v.carrier);
  return Arrow{C.tp(V, t), C.tp(t, V), half_braiding(C, v, t.raw())};
}

ValidationReport validate_center_object(const Cat& C, const CenterObject& v) {
  ValidationReport rep;
  const FusionData& d = C.data();
  int n = C.n();
  ++rep.checks;
  if (int(v.hb.size()) != n) {
    rep.fail("half-braiding has wrong number of components");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    ++rep.checks;
    Obj X = C.simple(i);
    if (v.hb[i].dom != C.tensor(v.carrier, X) || v.hb[i].cod != C.tensor(X, v.carrier)) {
      rep.fail("component at " + d.label(i) + " has the wrong type");
      return rep;
    }
    try {
      C.inverse(v.hb[i]);
    } catch (const NotInvertible&) {
      rep.fail("component at " + d.label(i) + " is not invertible");
    }
  }
  ++rep.checks;
  if (!v.hb[d.unit].is_identity()) rep.fail("sigma(1) is not the identity");
  Term V = C.leaf(v.carrier);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Term X = C.leaf(i), Y = C.leaf(j);
      Arrow lhs = half_braiding(C, v, C.tp(X, Y));
      Arrow rhs = C.seq({C.tens(half_braiding(C, v, X), C.id(Y)), C.tens(C.id(X), half_braiding(C, v, Y))});
      ++rep.checks;
      if (!C.equal(lhs, rhs)) rep.fail("multiplicativity fails at (" + d.label(i) + "," + d.label(j) + ")");
    }
  return rep;
}

CenterObject tensor_center(const Cat& C, const CenterObject& v, const CenterObject& w) {
  CenterObject r;
  r.carrier = C.tensor(v.carrier, w.carrier);
  Term V = C.leaf(v.carrier), W = C.leaf(w.carrier);
  for (int i = 0; i < C.n(); ++i) {
    Term X = C.leaf(i);
    Arrow a = C.seq({C.tens(C.id(V), half_braiding(C, w, X)), C.tens(half_braiding(C, v, X), C.id(W))});
    r.hb.push_back(C.frame(C.tp(C.tp(V, W), X), a, C.tp(X, C.tp(V, W))).m);
  }
  return r;
}

Morphism braiding(const Cat& C, const CenterObject& v, const CenterObject& w) {
  return half_braiding(C, v, w.carrier);
}

bool is_center_morphism(const Cat& C, const Morphism& f, const CenterObject& v, const CenterObject& w) {
  if (f.dom != v.carrier || f.cod != w.carrier) return false;
  for (int i = 0; i < C.n(); ++i) {
    Morphism idX = C.id(C.simple(i));
    if (w.hb[i] * C.tensor(f, idX) != C.tensor(idX, f) * v.hb[i]) return false;
  }
  return true;
}

std::vector<Morphism> center_hom(const Cat& C, const CenterObject& v, const CenterObject& w) {
  // unknowns: entries of f_k, columns of the intertwining system
  std::vector<std::array<int, 3>> unk;
  for (int k = 0; k < C.n(); ++k)
    for (int r = 0; r < w.carrier.mult[k]; ++r)
      for (int c = 0; c < v.carrier.mult[k]; ++c) unk.push_back({k, r, c});
  std::vector<std::vector<Scalar>> cols;
  for (auto [k, r, c] : unk) {
    Morphism f = C.zero(v.carrier, w.carrier);
    f.blocks[k](r, c) = Scalar(1);
    std::vector<Scalar> col;
    for (int i = 0; i < C.n(); ++i) {
      Morphism idX = C.id(C.simple(i));
      Morphism res = w.hb[i] * C.tensor(f, idX) - C.tensor(idX, f) * v.hb[i];
      for (const auto& b : res.blocks)
        for (int a = 0; a < b.rows(); ++a)
          for (int e = 0; e < b.cols(); ++e) col.push_back(b(a, e));
    }
    cols.push_back(std::move(col));
  }
  std::vector<Morphism> out;
  if (unk.empty()) return out;
  int nrows = int(cols[0].size());
  Mat M(nrows, int(unk.size()));
  for (size_t u = 0; u < unk.size(); ++u)
    for (int a = 0; a < nrows; ++a) M(a, int(u)) = cols[u][a];
  for (const auto& x : M.nullspace()) {
    Morphism f = C.zero(v.carrier, w.carrier);
    for (size_t u = 0; u < unk.size(); ++u) f.blocks[unk[u][0]](unk[u][1], unk[u][2]) = x[u];
    out.push_back(f);
  }
  return out;
}

CenterObject induced_autoeq(const MonFunctor& F, const CenterObject& v) {
  const Cat& C = *F.C;
  CenterObject r;
  r.carrier = F.on(v.carrier);
  r.hb.resize(C.n());
  for (int i = 0; i < C.n(); ++i) {
    Obj X = C.simple(i);
    r.hb[F.map[i]] = C.inverse(F.f2(X, v.carrier)) * F.on(v.hb[i]) * F.f2(v.carrier, X);
  }
  return r;
}

bool center_equal(const CenterObject& a, const CenterObject& b) {
  return a.carrier == b.carrier && a.hb == b.hb;
}

}  // namespace pivctr
