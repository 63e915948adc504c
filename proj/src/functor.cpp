#include "pivctr/functor.hpp"

namespace pivctr {

Obj MonFunctor::on(const Obj& a) const {
  Obj r = C->zero_obj();
  for (int i = 0; i < C->n(); ++i) r.mult[map[i]] = a.mult[i];
  return r;
}

Morphism MonFunctor::on(const Morphism& f) const {
  Morphism r;
  r.dom = on(f.dom);
  r.cod = on(f.cod);
  r.blocks.resize(f.blocks.size());
  for (int i = 0; i < C->n(); ++i) r.blocks[map[i]] = f.blocks[i];
  return r;
}

Arrow MonFunctor::on(const Arrow& f) const {
  return Arrow{C->leaf(on(f.dom.raw())), C->leaf(on(f.cod.raw())), on(f.m)};
}

Term MonFunctor::on_term(const Term& t) const {
  if (t.is_leaf()) return C->leaf(on(t.raw()));
  return C->tp(on_term(t.left()), on_term(t.right()));
}

Morphism MonFunctor::f2(const Obj& a, const Obj& b) const {
  Obj fa = on(a), fb = on(b);
  Morphism r = C->zero(C->tensor(fa, fb), on(C->tensor(a, b)));
  TensorLayout L = C->layout(a, b), Lf = C->layout(fa, fb);
  const auto& N = C->data().N;
  int n = C->n();
  for (int i = 0; i < n; ++i) {
    if (!a.mult[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!b.mult[j]) continue;
      for (int k = 0; k < n; ++k) {
        int nm = N[i][j][k];
        if (!nm) continue;
        const Mat& blk = F2[i][j].blocks[map[k]];
        Mat& out = r.blocks[map[k]];
        for (int ca = 0; ca < a.mult[i]; ++ca)
          for (int cb = 0; cb < b.mult[j]; ++cb)
            for (int mu = 0; mu < nm; ++mu)
              for (int nu = 0; nu < nm; ++nu) {
                const Scalar& v = blk(mu, nu);
                if (v.is_zero()) continue;
                out(L.pos(k, i, ca, j, cb, mu), Lf.pos(map[k], map[i], ca, map[j], cb, nu)) = v;
              }
      }
    }
  }
  return r;
}

Arrow MonFunctor::fn(const Term& t) const {
  if (t.is_leaf()) return C->id(C->leaf(on(t.raw())));
  Arrow l = fn(t.left()), r = fn(t.right());
  Morphism m = f2(t.left().raw(), t.right().raw()) * C->tensor(l.m, r.m);
  return Arrow{on_term(t), C->leaf(on(t.raw())), m};
}

bool MonFunctor::is_identity_map() const {
  for (int i = 0; i < int(map.size()); ++i)
    if (map[i] != i) return false;
  return true;
}

namespace {

MonFunctor blank(const Cat& C, const std::string& name) {
  MonFunctor F;
  F.C = &C;
  F.name = name;
  F.map.resize(C.n());
  for (int i = 0; i < C.n(); ++i) F.map[i] = i;
  F.F2.assign(C.n(), std::vector<Morphism>(C.n()));
  return F;
}

}  // namespace

MonFunctor identity_functor(const Cat& C) {
  MonFunctor F = blank(C, "id");
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j) F.F2[i][j] = C.id(C.tensor(C.simple(i), C.simple(j)));
  return F;
}

MonFunctor double_dual_functor(const Cat& C) {
  MonFunctor F = blank(C, "double-dual");
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j) {
      Term a = C.leaf(i), b = C.leaf(j);
      Arrow jab = C.J(a, b);
      Arrow jrev = C.J(C.dual_term(b), C.dual_term(a));
      F.F2[i][j] = C.dual(jab.m) * C.inverse(jrev.m);
    }
  return F;
}

MonFunctor conj_functor(const Cat& C, int beta) {
  if (!is_invertible(C.data(), beta))
    throw NotInvertible(C.data().label(beta) + " is not an invertible object");
  MonFunctor F = blank(C, "I^" + C.data().label(beta));
  Term b = C.leaf(beta), bd = C.dual_term(b);
  for (int i = 0; i < C.n(); ++i) {
    Obj img = C.tensor(C.tensor(C.simple(beta), C.simple(i)), C.dual(C.simple(beta)));
    for (int k = 0; k < C.n(); ++k)
      if (img.mult[k]) F.map[i] = k;
  }
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j) {
      Term x = C.leaf(i), y = C.leaf(j);
      Term dom = C.tp(C.tp(C.tp(b, x), bd), C.tp(C.tp(b, y), bd));
      Arrow mid = C.tens({C.id(b), C.id(x), C.ev(b), C.id(y), C.id(bd)});
      Term target = C.tp(C.tp(b, C.tp(x, y)), bd);
      Arrow a = C.seq({C.rebracket(dom, mid.dom), mid, C.rebracket(mid.cod, target)});
      if (a.m.dom != C.tensor(C.simple(F.map[i]), C.simple(F.map[j])) ||
          a.m.cod != F.on(C.tensor(C.simple(i), C.simple(j))))
        throw ShapeMismatch("conjugation functor: unexpected raw shape");
      F.F2[i][j] = a.m;
    }
  F.F0 = C.coev(C.simple(beta)).blocks[C.unit()](0, 0);
  return F;
}

MonFunctor compose_functors(const MonFunctor& F, const MonFunctor& G) {
  const Cat& C = *F.C;
  MonFunctor H = blank(C, F.name + "." + G.name);
  for (int i = 0; i < C.n(); ++i) H.map[i] = F.map[G.map[i]];
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j)
      H.F2[i][j] = F.on(G.F2[i][j]) * F.f2(G.on(C.simple(i)), G.on(C.simple(j)));
  H.F0 = F.F0 * G.F0;
  return H;
}

ValidationReport validate_functor(const MonFunctor& F) {
  const Cat& C = *F.C;
  const FusionData& d = C.data();
  ValidationReport rep;
  int n = C.n();
  std::vector<int> seen(n, 0);
  for (int i = 0; i < n; ++i) ++seen[F.map[i]];
  ++rep.checks;
  for (int i = 0; i < n; ++i)
    if (seen[i] != 1) {
      rep.fail(F.name + ": simple map is not a permutation");
      return rep;
    }
  for (int i = 0; i < n; ++i) {
    ++rep.checks;
    if (F.map[d.dual[i]] != d.dual[F.map[i]]) rep.fail(F.name + ": map does not commute with duals at " + d.label(i));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (d.N[i][j][k] != d.N[F.map[i]][F.map[j]][F.map[k]])
          rep.fail(F.name + ": map does not preserve fusion at (" + d.label(i) + "," + d.label(j) + ")");
  }
  if (!rep.ok) return rep;
  ++rep.checks;
  if (F.F0.is_zero() || F.map[d.unit] != d.unit) rep.fail(F.name + ": F0 not invertible");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ++rep.checks;
      try {
        C.inverse(F.F2[i][j]);
      } catch (const NotInvertible&) {
        rep.fail(F.name + ": F2(" + d.label(i) + "," + d.label(j) + ") not invertible");
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Obj a = C.simple(i), b = C.simple(j), c = C.simple(k);
        Obj fa = F.on(a), fb = F.on(b), fc = F.on(c);
        Morphism lhs = F.on(C.associator(a, b, c)) * F.f2(C.tensor(a, b), c) * C.tensor(F.f2(a, b), C.id(fc));
        Morphism rhs = F.f2(a, C.tensor(b, c)) * C.tensor(C.id(fa), F.f2(b, c)) * C.associator(fa, fb, fc);
        ++rep.checks;
        if (lhs != rhs)
          rep.fail(F.name + ": associativity axiom fails at (" + d.label(i) + "," + d.label(j) + "," + d.label(k) + ")");
      }
  Obj u = C.unit_obj();
  for (int i = 0; i < n; ++i) {
    Obj a = C.simple(i);
    rep.checks += 2;
    if (!F.f2(u, a).scaled(F.F0).is_identity() || !F.f2(a, u).scaled(F.F0).is_identity())
      rep.fail(F.name + ": unit axiom fails at " + d.label(i));
  }
  return rep;
}

Morphism duality_transform(const MonFunctor& F, const Obj& x) {
  const Cat& C = *F.C;
  Obj xd = C.dual(x);
  Term A = C.leaf(F.on(xd)), B = C.leaf(F.on(x));
  Morphism e = F.on(C.ev(x)).scaled(F.F0.inverse()) * F.f2(xd, x);
  Arrow ea = C.arrow(C.tp(A, B), C.unit_term(), e);
  Arrow g = C.seq({C.rebracket(A, C.tp(A, C.unit_term())), C.tens(C.id(A), C.coev(B)),
                   C.tens(ea, C.id(C.dual_term(B)))});
  return C.rebracket(g.cod, C.dual_term(B)).m * g.m;
}

Scalar duality_scalar(const MonFunctor& F, int i) {
  const Cat& C = *F.C;
  Morphism g = duality_transform(F, C.simple(i));
  return g.blocks[C.dual(F.map[i])](0, 0);
}

ValidationReport verify_duality_monoidal(const MonFunctor& F) {
  const Cat& C = *F.C;
  ValidationReport rep;
  int n = C.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Obj X = C.simple(i), Y = C.simple(j);
      Obj XY = C.tensor(X, Y);
      Morphism lhs = duality_transform(F, XY);
      Morphism jxy = C.J(C.leaf(X), C.leaf(Y)).m;
      Morphism jf = C.J(C.leaf(F.on(X)), C.leaf(F.on(Y))).m;
      Morphism rhs = C.dual(C.inverse(F.f2(X, Y))) * C.inverse(jf) *
                     C.tensor(duality_transform(F, Y), duality_transform(F, X)) *
                     C.inverse(F.f2(C.dual(Y), C.dual(X))) * F.on(jxy);
      ++rep.checks;
      if (lhs != rhs)
        rep.fail(F.name + ": duality transformation not monoidal at (" + C.data().label(i) + "," +
                 C.data().label(j) + ")");
    }
  return rep;
}

bool verify_conj_duality(const Cat& C, int beta) {
  MonFunctor I = conj_functor(C, beta);
  const FusionData& d = C.data();
  int bd_idx = d.dual[beta];
  Scalar c = (d.coev_norm[beta] * d.ev_norm[bd_idx]).inverse();
  Term b = C.leaf(beta), bd = C.dual_term(b);
  for (int i = 0; i < C.n(); ++i) {
    Term X = C.leaf(i), Xd = C.dual_term(X);
    Arrow K = C.seq({C.J(C.tp(b, X), bd), C.tens(C.id(C.dual_term(bd)), C.J(b, X))});
    Arrow rb = C.rebracket(C.tp(C.tp(b, Xd), bd), C.tp(C.dual_term(bd), C.tp(Xd, bd)));
    Morphism predicted = C.inverse(K.m) * rb.m.scaled(c);
    Morphism g = duality_transform(I, C.simple(i));
    if (predicted.blocks != g.blocks) return false;
  }
  return true;
}

Morphism MonNatTrans::on(const Obj& a) const {
  const Cat& C = *source->C;
  Morphism r = C.zero(source->on(a), target->on(a));
  for (int k = 0; k < C.n(); ++k)
    if (a.mult[k]) r.blocks[source->map[k]] = Mat::scalar(a.mult[k], lambda[k]);
  return r;
}

ValidationReport verify_nat(const MonNatTrans& j) {
  const MonFunctor& F = *j.source;
  const MonFunctor& G = *j.target;
  const Cat& C = *F.C;
  ValidationReport rep;
  ++rep.checks;
  if (F.map != G.map) {
    rep.fail("source and target functors differ on simples");
    return rep;
  }
  for (int i = 0; i < C.n(); ++i) {
    ++rep.checks;
    if (j.lambda[i].is_zero()) rep.fail("zero component at " + C.data().label(i));
  }
  ++rep.checks;
  if (j.lambda[C.unit()] * F.F0 != G.F0) rep.fail("unit equation fails");
  for (int a = 0; a < C.n(); ++a)
    for (int b = 0; b < C.n(); ++b) {
      Obj X = C.simple(a), Y = C.simple(b);
      ++rep.checks;
      if (j.on(C.tensor(X, Y)) * F.f2(X, Y) != G.f2(X, Y) * C.tensor(j.on(X), j.on(Y)))
        rep.fail("monoidality fails at (" + C.data().label(a) + "," + C.data().label(b) + ")");
    }
  return rep;
}

namespace {

Morphism leafwise(const MonNatTrans& j, const Cat& C, const Term& t) {
  if (t.is_leaf()) return j.on(t.raw());
  return C.tensor(leafwise(j, C, t.left()), leafwise(j, C, t.right()));
}

}  // namespace

bool verify_nat_word(const MonNatTrans& j, const Term& t) {
  const Cat& C = *j.source->C;
  return j.on(t.raw()) * j.source->fn(t).m == j.target->fn(t).m * leafwise(j, C, t);
}

std::vector<MonNatTrans> solve_nat_tensor(const MonFunctor& F, const MonFunctor& G, std::string* witness) {
  const Cat& C = *F.C;
  const FusionData& d = C.data();
  if (F.map != G.map) {
    if (witness) *witness = "simple maps differ";
    return {};
  }
  int n = C.n();
  std::vector<MultEquation> eqs;
  MultEquation ue;
  ue.exps.assign(n, 0);
  ue.exps[d.unit] = 1;
  ue.rhs = G.F0 / F.F0;
  ue.witness = "unit";
  eqs.push_back(ue);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!d.N[i][j][k]) continue;
        const Mat& fb = F.F2[i][j].blocks[F.map[k]];
        const Mat& gb = G.F2[i][j].blocks[F.map[k]];
        std::string w = "(" + d.label(i) + "," + d.label(j) + ";" + d.label(k) + ")";
        Scalar r;
        bool have = false;
        for (int a = 0; a < fb.rows() && !have; ++a)
          for (int b = 0; b < fb.cols() && !have; ++b)
            if (!fb(a, b).is_zero()) {
              r = gb(a, b) / fb(a, b);
              have = true;
            }
        if (!have || r.is_zero() || gb != fb.scaled(r)) {
          if (witness) *witness = "InconsistentBlockRatio at " + w;
          return {};
        }
        MultEquation e;
        e.exps.assign(n, 0);
        e.exps[i] += 1;
        e.exps[j] += 1;
        e.exps[k] -= 1;
        e.rhs = r.inverse();
        e.witness = w;
        eqs.push_back(std::move(e));
      }
  MultSolveResult res = solve_multiplicative(n, eqs, d.root_order);
  if (!res.consistent) {
    if (witness) *witness = "no solution; violated relation at " + res.witness;
    return {};
  }
  std::vector<MonNatTrans> out;
  for (auto& s : res.solutions) {
    MonNatTrans t;
    t.source = &F;
    t.target = &G;
    t.lambda = s;
    out.push_back(std::move(t));
  }
  return out;
}

MonNatTrans invert_nat(const MonNatTrans& j) {
  MonNatTrans r;
  r.source = j.target;
  r.target = j.source;
  for (const auto& l : j.lambda) {
    if (l.is_zero()) throw ZeroComponent("monoidal natural transformation has a zero component");
    r.lambda.push_back(l.inverse());
  }
  return r;
}

bool verify_lemma_mon_nat_inv(const MonNatTrans& j) {
  const MonFunctor& F = *j.source;
  const MonFunctor& G = *j.target;
  const Cat& C = *F.C;
  for (int i = 0; i < C.n(); ++i) {
    Obj X = C.simple(i);
    Morphism lhs = C.dual(C.inverse(j.on(X))) * duality_transform(F, X);
    Morphism rhs = duality_transform(G, X) * j.on(C.dual(X));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace pivctr
