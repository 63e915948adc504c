#include "pivctr/comonad.hpp"

namespace pivctr {

const EndRealization& Comonad::Z(const Obj& v) const {
  std::string key = v.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = real_.find(key);
    if (it != real_.end()) return it->second;
  }
  const Cat& C = C_;
  EndRealization R;
  R.base = v;
  R.total = C.zero_obj();
  for (int i = 0; i < C.n(); ++i) {
    Obj p = C.tensor(C.tensor(C.simple(i), v), C.dual(C.simple(i)));
    R.part.push_back(p);
    R.total = C.sum(R.total, p);
  }
  std::vector<int> off(C.n(), 0);
  for (int i = 0; i < C.n(); ++i) {
    const Obj& p = R.part[i];
    Morphism s = C.zero(p, R.total), q = C.zero(R.total, p);
    for (int k = 0; k < C.n(); ++k) {
      for (int c = 0; c < p.mult[k]; ++c) {
        s.blocks[k](off[k] + c, c) = Scalar(1);
        q.blocks[k](c, off[k] + c) = Scalar(1);
      }
      off[k] += p.mult[k];
    }
    R.sect.push_back(std::move(s));
    R.proj.push_back(std::move(q));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return real_.emplace(key, std::move(R)).first->second;
}

Term Comonad::part_term(const Obj& v, int i) const {
  const Cat& C = C_;
  Term X = C.leaf(i);
  return C.tp(C.tp(X, C.leaf(v)), C.dual_term(X));
}

Morphism Comonad::Zmor(const Morphism& f) const {
  const Cat& C = C_;
  const EndRealization& A = Z(f.dom);
  const EndRealization& B = Z(f.cod);
  Morphism r = C.zero(A.total, B.total);
  for (int i = 0; i < C.n(); ++i) {
    Obj X = C.simple(i);
    r = r + B.sect[i] * C.tensor(C.tensor(C.id(X), f), C.id(C.dual(X))) * A.proj[i];
  }
  return r;
}

Morphism Comonad::pi(const Obj& v, const Obj& w) const {
  const Cat& C = C_;
  const EndRealization& R = Z(v);
  Morphism r = C.zero(R.total, C.tensor(C.tensor(w, v), C.dual(w)));
  Morphism idv = C.id(v);
  for (int k = 0; k < C.n(); ++k)
    for (int c = 0; c < w.mult[k]; ++c)
      r = r + C.tensor(C.tensor(C.incl(w, k, c), idv), C.dual(C.proj(w, k, c))) * R.proj[k];
  return r;
}

Arrow Comonad::pi(const Obj& v, const Term& w) const {
  const Cat& C = C_;
  return Arrow{C.leaf(Z(v).total), C.tp(C.tp(w, C.leaf(v)), C.dual_term(w)), pi(v, w.raw())};
}

Morphism Comonad::delta(const Obj& v) const {
  std::string key = v.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = delta_.find(key);
    if (it != delta_.end()) return it->second;
  }
  const Cat& C = C_;
  const EndRealization& R = Z(v);
  const EndRealization& RR = Z(R.total);
  Morphism r = C.zero(R.total, RR.total);
  Term Vt = C.leaf(v);
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j) {
      Term Xi = C.leaf(i), Xj = C.leaf(j);
      Term w = C.tp(Xi, Xj);
      Arrow p = pi(v, w);
      Arrow jj = C.tens(C.id(C.tp(w, Vt)), C.J(Xi, Xj));
      Term T = C.tp(C.tp(Xi, C.tp(C.tp(Xj, Vt), C.dual_term(Xj))), C.dual_term(Xi));
      Arrow a = C.frame(p.dom, C.seq({p, jj}), T);
      Morphism s2 = RR.sect[i] * C.tensor(C.tensor(C.id(Xi.raw()), R.sect[j]), C.id(C.dual(Xi.raw())));
      r = r + s2 * a.m;
    }
  std::lock_guard<std::mutex> lock(mu_);
  return delta_.emplace(key, std::move(r)).first->second;
}

Morphism Comonad::epsilon(const Obj& v) const { return Z(v).proj[C_.unit()]; }

Morphism Comonad::iota(const Obj& v) const { return Z(v).sect[C_.unit()]; }

Morphism Comonad::Z2(const Obj& v, const Obj& w) const {
  std::string key = v.key() + "|" + w.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = z2_.find(key);
    if (it != z2_.end()) return it->second;
  }
  const Cat& C = C_;
  Obj vw = C.tensor(v, w);
  const EndRealization& R = Z(vw);
  Morphism r = C.zero(C.tensor(Zobj(v), Zobj(w)), R.total);
  Term Vt = C.leaf(v), Wt = C.leaf(w);
  for (int i = 0; i < C.n(); ++i) {
    Term X = C.leaf(i), Xd = C.dual_term(X);
    Arrow pp = C.tens(pi(v, X), pi(w, X));
    Arrow mid = C.tens({C.id(X), C.id(Vt), C.ev(X), C.id(Wt), C.id(Xd)});
    Arrow a = C.frame(pp.dom, C.seq({pp, mid}), C.tp(C.tp(X, C.tp(Vt, Wt)), Xd));
    r = r + R.sect[i] * a.m;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return z2_.emplace(key, std::move(r)).first->second;
}

Morphism Comonad::Z0() const {
  const Cat& C = C_;
  const EndRealization& R = Z(C.unit_obj());
  Morphism r = C.zero(C.unit_obj(), R.total);
  for (int i = 0; i < C.n(); ++i) r = r + R.sect[i] * C.coev(C.simple(i));
  return r;
}

ValidationReport verify_realization(const Comonad& Z, const Obj& v) {
  const Cat& C = Z.cat();
  const EndRealization& R = Z.Z(v);
  ValidationReport rep;
  Morphism s = C.zero(R.total, R.total);
  for (int i = 0; i < C.n(); ++i) {
    s = s + R.sect[i] * R.proj[i];
    for (int j = 0; j < C.n(); ++j) {
      ++rep.checks;
      Morphism pq = R.proj[i] * R.sect[j];
      bool ok = i == j ? pq.is_identity() : pq.is_zero();
      if (!ok) rep.fail("proj/sect not orthogonal at (" + C.data().label(i) + "," + C.data().label(j) + ")");
    }
  }
  ++rep.checks;
  if (!s.is_identity()) rep.fail("sections do not sum to the identity");
  return rep;
}

ValidationReport verify_comonad_laws(const Comonad& Z, const Obj& v) {
  const Cat& C = Z.cat();
  ValidationReport rep;
  std::string tag = "[" + v.key() + "]";
  Morphism d = Z.delta(v);
  Obj zv = Z.Zobj(v);
  rep.checks += 3;
  if (Z.Zmor(d) * d != Z.delta(zv) * d) rep.fail("coassociativity fails at " + tag);
  if (!(Z.epsilon(zv) * d).is_identity()) rep.fail("left counit law fails at " + tag);
  if (!(Z.Zmor(Z.epsilon(v)) * d).is_identity()) rep.fail("right counit law fails at " + tag);
  for (int k = 0; k < C.n(); ++k) {
    Obj w = C.simple(k);
    Obj zw = Z.Zobj(w);
    Morphism z2 = Z.Z2(v, w);
    Morphism lhs = Z.delta(C.tensor(v, w)) * z2;
    Morphism rhs = Z.Zmor(z2) * Z.Z2(zv, zw) * C.tensor(d, Z.delta(w));
    rep.checks += 2;
    if (lhs != rhs) rep.fail("delta not monoidal at " + tag + " (x) " + C.data().label(k));
    if (Z.epsilon(C.tensor(v, w)) * z2 != C.tensor(Z.epsilon(v), Z.epsilon(w)))
      rep.fail("epsilon not monoidal at " + tag + " (x) " + C.data().label(k));
  }
  Morphism z0 = Z.Z0();
  Obj u = C.unit_obj();
  rep.checks += 2;
  if (Z.delta(u) * z0 != Z.Zmor(z0) * z0) rep.fail("delta not unital");
  if (!(Z.epsilon(u) * z0).is_identity()) rep.fail("epsilon not unital");
  return rep;
}

ValidationReport validate_comodule(const Comonad& Z, const Comodule& m) {
  ValidationReport rep;
  rep.checks += 2;
  if (m.rho.dom != m.carrier || m.rho.cod != Z.Zobj(m.carrier)) {
    rep.fail("coaction has the wrong type");
    return rep;
  }
  if (Z.delta(m.carrier) * m.rho != Z.Zmor(m.rho) * m.rho) rep.fail("coassociativity of the coaction fails");
  if (!(Z.epsilon(m.carrier) * m.rho).is_identity()) rep.fail("counit of the coaction fails");
  return rep;
}

Comodule comodule_from_center(const Comonad& Z, const CenterObject& v) {
  const Cat& C = Z.cat();
  auto rep = validate_center_object(C, v);
  if (!rep.ok) throw InvalidCenterObject(rep.violations.front());
  const EndRealization& R = Z.Z(v.carrier);
  Term Vt = C.leaf(v.carrier);
  Comodule m{v.carrier, C.zero(v.carrier, R.total)};
  for (int i = 0; i < C.n(); ++i) {
    Term X = C.leaf(i), Xd = C.dual_term(X);
    Arrow a = C.seq({C.rebracket(Vt, C.tp(Vt, C.unit_term())), C.tens(C.id(Vt), C.coev(X)),
                     C.tens(half_braiding(C, v, X), C.id(Xd))});
    m.rho = m.rho + R.sect[i] * C.frame(Vt, a, Z.part_term(v.carrier, i)).m;
  }
  return m;
}

CenterObject center_from_comodule(const Comonad& Z, const Comodule& m) {
  const Cat& C = Z.cat();
  auto rep = validate_comodule(Z, m);
  if (!rep.ok) throw InvalidComodule(rep.violations.front());
  const EndRealization& R = Z.Z(m.carrier);
  Term Vt = C.leaf(m.carrier);
  CenterObject v;
  v.carrier = m.carrier;
  for (int i = 0; i < C.n(); ++i) {
    Term X = C.leaf(i), Xd = C.dual_term(X);
    Arrow pr = C.arrow(Vt, Z.part_term(m.carrier, i), R.proj[i] * m.rho);
    Arrow a = C.seq({C.tens(pr, C.id(X)), C.tens(C.id(C.tp(X, Vt)), C.ev(X))});
    v.hb.push_back(C.frame(C.tp(Vt, X), a, C.tp(X, Vt)).m);
  }
  return v;
}

Comodule free_comodule(const Comonad& Z, const Obj& v) { return Comodule{Z.Zobj(v), Z.delta(v)}; }

CenterObject free_center(const Comonad& Z, const Obj& v) {
  return center_from_comodule(Z, free_comodule(Z, v));
}

Comodule unit_comodule(const Comonad& Z) { return Comodule{Z.cat().unit_obj(), Z.Z0()}; }

Comodule tensor_comodule(const Comonad& Z, const Comodule& m, const Comodule& n) {
  const Cat& C = Z.cat();
  return Comodule{C.tensor(m.carrier, n.carrier), Z.Z2(m.carrier, n.carrier) * C.tensor(m.rho, n.rho)};
}

Morphism hopf_left(const Comonad& Z, const Obj& x, const Comodule& m) {
  const Cat& C = Z.cat();
  return Z.Z2(x, m.carrier) * C.tensor(C.id(Z.Zobj(x)), m.rho);
}

Morphism hopf_right(const Comonad& Z, const Comodule& m, const Obj& x) {
  const Cat& C = Z.cat();
  return Z.Z2(m.carrier, x) * C.tensor(m.rho, C.id(Z.Zobj(x)));
}

ValidationReport verify_lemma_hopf_ops(const Comonad& Z, const std::vector<Obj>& xs,
                                       const std::vector<Comodule>& ms) {
  const Cat& C = Z.cat();
  ValidationReport rep;
  Comodule u = unit_comodule(Z);
  Obj one = C.unit_obj();
  std::vector<std::vector<Comodule>> mn(ms.size());
  for (size_t b = 0; b < ms.size(); ++b)
    for (size_t c = 0; c < ms.size(); ++c) mn[b].push_back(tensor_comodule(Z, ms[b], ms[c]));
  for (size_t a = 0; a < xs.size(); ++a) {
    const Obj& x = xs[a];
    Obj zx = Z.Zobj(x);
    std::string tx = "X=[" + x.key() + "]";
    rep.checks += 4;
    if (!hopf_left(Z, x, u).is_identity()) rep.fail("Hl(X,1) != id at " + tx);
    if (!hopf_right(Z, u, x).is_identity()) rep.fail("Hr(1,X) != id at " + tx);
    Comodule rx = free_comodule(Z, x);
    if (Z.Zmor(Z.epsilon(x)) * hopf_left(Z, one, rx) != Z.Z2(one, x)) rep.fail("R(eps) Hl(1,R(X)) != R2(1,X) at " + tx);
    if (Z.Zmor(Z.epsilon(x)) * hopf_right(Z, rx, one) != Z.Z2(x, one)) rep.fail("R(eps) Hr(R(X),1) != R2(X,1) at " + tx);
    std::vector<Morphism> hl, hr;
    for (const Comodule& M : ms) {
      hl.push_back(hopf_left(Z, x, M));
      hr.push_back(hopf_right(Z, M, x));
    }
    for (size_t b = 0; b < ms.size(); ++b) {
      const Comodule& M = ms[b];
      std::string tm = tx + ", M#" + std::to_string(b);
      rep.checks += 2;
      try {
        C.inverse(hl[b]);
        C.inverse(hr[b]);
      } catch (const NotInvertible&) {
        rep.fail("Hopf operator not invertible at " + tm);
      }
      Obj xm = C.tensor(x, M.carrier);
      for (size_t c = 0; c < ms.size(); ++c) {
        const Comodule& N = ms[c];
        std::string tmn = tm + ", N#" + std::to_string(c);
        const Comodule& MN = mn[b][c];
        rep.checks += 2;
        Morphism l1 = hopf_left(Z, x, MN);
        Morphism r1 = Z.Zmor(C.associator(x, M.carrier, N.carrier)) * hopf_left(Z, xm, N) *
                      C.tensor(hl[b], C.id(N.carrier)) * C.associator_inv(zx, M.carrier, N.carrier);
        if (l1 != r1) rep.fail("Hl(X,M N) identity fails at " + tmn);
        Morphism l2 = hopf_right(Z, MN, x);
        Morphism r2 = Z.Zmor(C.associator_inv(M.carrier, N.carrier, x)) *
                      hopf_right(Z, M, C.tensor(N.carrier, x)) * C.tensor(C.id(M.carrier), hr[c]) *
                      C.associator(M.carrier, N.carrier, zx);
        if (l2 != r2) rep.fail("Hr(M N,X) identity fails at " + tmn);
      }
    }
  }
  return rep;
}

}  // namespace pivctr
