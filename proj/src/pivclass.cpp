#include "pivctr/pivclass.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pivctr/parallel.hpp"

namespace pivctr {

std::string JElement::str() const {
  const Cat& C = *j.source->C;
  std::ostringstream os;
  os << "beta=" << C.data().label(beta) << " j=[";
  for (size_t i = 0; i < j.lambda.size(); ++i) os << (i ? ", " : "") << j.lambda[i].str();
  os << "]";
  return os.str();
}

JElement make_jelement(int beta, std::shared_ptr<const MonFunctor> source, const MonFunctor& target,
                       std::vector<Scalar> lambda) {
  JElement e;
  e.beta = beta;
  e.j.source = source.get();
  e.j.target = &target;
  e.j.lambda = std::move(lambda);
  e.source = std::move(source);
  return e;
}

std::vector<CenterObject> free_generators(const Comonad& Z) {
  std::vector<CenterObject> out;
  for (int i = 0; i < Z.cat().n(); ++i) out.push_back(free_center(Z, Z.cat().simple(i)));
  return out;
}

bool extensionally_equal(const NatTransOnCenter& a, const NatTransOnCenter& b) {
  if (a.objects.size() != b.objects.size()) return false;
  for (size_t k = 0; k < a.objects.size(); ++k)
    if (a.objects[k].carrier != b.objects[k].carrier || a.components[k] != b.components[k]) return false;
  return true;
}

namespace {

Morphism scalar_mor(const Cat& C, const Scalar& s) { return C.id(C.unit_obj()).scaled(s); }

bool is_identity_functor(const MonFunctor& F) {
  if (!F.is_identity_map() || !F.F0.is_one()) return false;
  for (const auto& row : F.F2)
    for (const auto& m : row)
      if (!m.is_identity()) return false;
  return true;
}

Morphism xi_impl(const Comonad& Z, const MonFunctor& G, const Obj& v) {
  const Cat& C = Z.cat();
  const EndRealization& R = Z.Z(v);
  const EndRealization& RG = Z.Z(G.on(v));
  Morphism r = C.zero(G.on(R.total), RG.total);
  for (int i = 0; i < C.n(); ++i) {
    if (R.part[i].is_zero()) continue;
    Term t = Z.part_term(v, i);
    Arrow g3inv = C.inv(G.fn(t));
    Term GX = C.leaf(G.map[i]), GV = C.leaf(G.on(v));
    Term GXd = C.leaf(G.on(C.dual(C.simple(i))));
    Arrow gam = C.arrow(GXd, C.dual_term(GX), duality_transform(G, C.simple(i)));
    Arrow a = C.seq({g3inv, C.tens(C.id(C.tp(GX, GV)), gam)});
    Arrow f = C.frame(a.dom, a, Z.part_term(G.on(v), G.map[i]));
    r = r + RG.sect[G.map[i]] * f.m * G.on(R.proj[i]);
  }
  return r;
}

Morphism zeta_impl(const Comonad& Z, const MonFunctor& I, int beta, const Obj& v) {
  Morphism chi = chi_beta_comodule(Z, beta, free_comodule(Z, v));
  return Z.cat().inverse(xi_impl(Z, I, v) * chi);
}

// Phi(beta)_V along the half-braiding of F~(V).
Morphism phi_impl(const Cat& C, const MonFunctor& F, const JElement& b, const CenterObject& v) {
  CenterObject fv = induced_autoeq(F, v);
  return b.j.on(v.carrier) * chi_beta(C, b.beta, fv);
}

}  // namespace

Morphism chi_beta(const Cat& C, int beta, const CenterObject& v) {
  if (!is_invertible(C.data(), beta)) throw NotInvertible(C.data().label(beta) + " is not invertible");
  Term Vt = C.leaf(v.carrier), b = C.leaf(beta), bd = C.dual_term(b);
  Arrow a = C.seq({C.rebracket(Vt, C.tp(Vt, C.unit_term())), C.tens(C.id(Vt), C.coev(b)),
                   C.tens(half_braiding(C, v, b), C.id(bd))});
  return a.m;
}

Morphism chi_beta_comodule(const Comonad& Z, int beta, const Comodule& m) {
  const Cat& C = Z.cat();
  if (!is_invertible(C.data(), beta)) throw NotInvertible(C.data().label(beta) + " is not invertible");
  return Z.pi(m.carrier, C.simple(beta)) * m.rho;
}

ValidationReport verify_chi(const Comonad& Z, int beta, const std::vector<CenterObject>& vs) {
  const Cat& C = Z.cat();
  MonFunctor I = conj_functor(C, beta);
  ValidationReport rep;
  std::string tb = " (beta=" + C.data().label(beta) + ")";
  ++rep.checks;
  if (chi_beta(C, beta, unit_center(C)) != scalar_mor(C, I.F0)) rep.fail("chi on the unit is not I_0" + tb);
  std::vector<Morphism> chis;
  for (size_t k = 0; k < vs.size(); ++k) {
    const CenterObject& v = vs[k];
    std::string tag = " at #" + std::to_string(k) + tb;
    Morphism c = chi_beta(C, beta, v);
    rep.checks += 2;
    if (!is_center_morphism(C, c, v, induced_autoeq(I, v))) rep.fail("chi is not a center morphism" + tag);
    if (chi_beta_comodule(Z, beta, comodule_from_center(Z, v)) != c) rep.fail("chi != pi(beta) rho" + tag);
    chis.push_back(std::move(c));
  }
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = 0; b < vs.size(); ++b) {
      ++rep.checks;
      Morphism lhs = I.f2(vs[a].carrier, vs[b].carrier) * C.tensor(chis[a], chis[b]);
      if (lhs != chi_beta(C, beta, tensor_center(C, vs[a], vs[b])))
        rep.fail("chi not monoidal at (#" + std::to_string(a) + ",#" + std::to_string(b) + ")" + tb);
    }
  return rep;
}

Morphism xi_G(const Comonad& Z, const MonFunctor& G, const Obj& v) { return xi_impl(Z, G, v); }

ValidationReport verify_xi(const Comonad& Z, const MonFunctor& G, const std::vector<Obj>& vs) {
  const Cat& C = Z.cat();
  ValidationReport rep;
  std::vector<Morphism> xs;
  for (const Obj& v : vs) {
    std::string tag = " at [" + v.key() + "] for " + G.name;
    Morphism x = xi_impl(Z, G, v);
    const EndRealization& R = Z.Z(v);
    Obj gv = G.on(v);
    for (int i = 0; i < C.n(); ++i) {
      if (R.part[i].is_zero()) continue;
      Term t = Z.part_term(v, i);
      Term GX = C.leaf(G.map[i]);
      Arrow gam = C.arrow(C.leaf(G.on(C.dual(C.simple(i)))), C.dual_term(GX), duality_transform(G, C.simple(i)));
      Arrow g3p = C.seq({C.inv(G.fn(t)), C.tens(C.id(C.tp(GX, C.leaf(gv))), gam)});
      Arrow lhs = C.seq({C.arrow(C.leaf(x.dom), C.leaf(x.cod), x), Z.pi(gv, GX)});
      Arrow rhs = C.seq({C.arrow(C.leaf(x.dom), C.leaf(G.on(t.raw())), G.on(Z.pi(v, C.simple(i)))), g3p});
      ++rep.checks;
      if (!C.equal(lhs, C.arrow(rhs.dom, rhs.cod, rhs.m)))
        rep.fail("defining square fails at X=" + C.data().label(i) + tag);
    }
    ++rep.checks;
    try {
      C.inverse(x);
    } catch (const NotInvertible&) {
      rep.fail("xi is not invertible" + tag);
    }
    xs.push_back(std::move(x));
  }
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = 0; b < vs.size(); ++b) {
      const Obj &V = vs[a], &W = vs[b];
      Obj zv = Z.Zobj(V), zw = Z.Zobj(W);
      Morphism lhs = xi_impl(Z, G, C.tensor(V, W)) * G.on(Z.Z2(V, W)) * G.f2(zv, zw);
      Morphism rhs = Z.Zmor(G.f2(V, W)) * Z.Z2(G.on(V), G.on(W)) * C.tensor(xs[a], xs[b]);
      ++rep.checks;
      if (lhs != rhs) rep.fail("xi not monoidal at ([" + V.key() + "],[" + W.key() + "]) for " + G.name);
    }
  Obj one = C.unit_obj();
  Morphism g0 = scalar_mor(C, G.F0);
  ++rep.checks;
  if (xi_impl(Z, G, one) * G.on(Z.Z0()) * g0 != Z.Zmor(g0) * Z.Z0()) rep.fail("xi not unital for " + G.name);
  return rep;
}

Morphism zeta_beta(const Comonad& Z, int beta, const Obj& v) {
  MonFunctor I = conj_functor(Z.cat(), beta);
  return zeta_impl(Z, I, beta, v);
}

ValidationReport verify_zeta(const Comonad& Z, int beta, const std::vector<Obj>& vs) {
  const Cat& C = Z.cat();
  MonFunctor I = conj_functor(C, beta);
  ValidationReport rep;
  Term b = C.leaf(beta), bd = C.dual_term(b);
  std::string tb = " (beta=" + C.data().label(beta) + ")";
  std::vector<Morphism> zs;
  for (const Obj& v : vs) {
    Morphism z = zeta_impl(Z, I, beta, v);
    Obj vb = I.on(v);
    Term Vt = C.leaf(v), VB = C.tp(C.tp(b, Vt), bd);
    for (int i = 0; i < C.n(); ++i) {
      Term X = C.leaf(i), Xd = C.dual_term(X);
      Arrow lhs = C.seq({Z.pi(vb, X), C.tens(C.tens(C.id(X), C.expand(VB)), C.id(Xd))});
      Term Xb = C.tp(X, b);
      Arrow p = Z.pi(v, Xb);
      Arrow rhs = C.seq({C.arrow(C.leaf(z.dom), p.dom, z), p, C.tens(C.id(C.tp(Xb, Vt)), C.J(X, b))});
      ++rep.checks;
      if (!C.equal(lhs, rhs)) rep.fail("pi_{V^beta}(X) != pi_V(X beta) zeta at X=" + C.data().label(i) + ", V=[" + v.key() + "]" + tb);
    }
    zs.push_back(std::move(z));
  }
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t c = 0; c < vs.size(); ++c) {
      const Obj &V = vs[a], &W = vs[c];
      Morphism lhs = zeta_impl(Z, I, beta, C.tensor(V, W)) * Z.Zmor(I.f2(V, W)) * Z.Z2(I.on(V), I.on(W));
      Morphism rhs = Z.Z2(V, W) * C.tensor(zs[a], zs[c]);
      ++rep.checks;
      if (lhs != rhs) rep.fail("zeta not monoidal at ([" + V.key() + "],[" + W.key() + "])" + tb);
    }
  Obj one = C.unit_obj();
  ++rep.checks;
  if (zeta_impl(Z, I, beta, one) * Z.Zmor(scalar_mor(C, I.F0)) * Z.Z0() != Z.Z0()) rep.fail("zeta not unital" + tb);
  return rep;
}

std::vector<JElement> enumerate_J(const MonFunctor& F, const MonFunctor& G) {
  const Cat& C = *F.C;
  std::vector<JElement> out;
  for (int beta : invertibles(C.data())) {
    auto src = std::make_shared<const MonFunctor>(compose_functors(conj_functor(C, beta), F));
    for (auto& t : solve_nat_tensor(*src, G)) out.push_back(make_jelement(beta, src, G, t.lambda));
  }
  return out;
}

Morphism phi(const Comonad& Z, const MonFunctor& F, const JElement& b, const CenterObject& v) {
  return phi_impl(Z.cat(), F, b, v);
}

Morphism phi_via_comodule(const Comonad& Z, const MonFunctor& F, const JElement& b, const CenterObject& v) {
  const Cat& C = Z.cat();
  Comodule m = comodule_from_center(Z, v);
  return b.j.on(v.carrier) * Z.pi(F.on(v.carrier), C.simple(b.beta)) * xi_impl(Z, F, v.carrier) * F.on(m.rho);
}

NatTransOnCenter phi_extensional(const Comonad& Z, const MonFunctor& F, const MonFunctor& G,
                                 const JElement& b, const std::vector<CenterObject>& gens) {
  NatTransOnCenter h;
  h.source = &F;
  h.target = &G;
  h.objects = gens;
  for (const auto& v : gens) h.components.push_back(phi_impl(Z.cat(), F, b, v));
  return h;
}

bool verify_lemma_phi_pi(const Comonad& Z, const JElement& b, const MonFunctor& G, const Obj& v, const Obj& x) {
  const Cat& C = Z.cat();
  MonFunctor id = identity_functor(C);
  Morphism lhs = G.on(Z.pi(v, x)) * phi_impl(C, id, b, free_center(Z, v));
  Term bt = C.leaf(b.beta), bd = C.dual_term(bt), Xt = C.leaf(x), Vt = C.leaf(v);
  Term part = C.tp(C.tp(Xt, Vt), C.dual_term(Xt));
  Arrow p = Z.pi(v, C.tp(bt, Xt));
  Arrow a = C.seq({p, C.tens(C.id(C.tp(C.tp(bt, Xt), Vt)), C.J(bt, Xt))});
  Term T = C.tp(C.tp(bt, part), bd);
  Arrow f = C.frame(a.dom, a, T);
  Arrow g = C.seq({f, C.tens(C.tens(C.id(bt), C.atomize(part)), C.id(bd))});
  Morphism rhs = b.j.on(part.raw()) * C.atomize(g.cod).m * g.m;
  return lhs == rhs;
}

ValidationReport verify_phi(const Comonad& Z, const MonFunctor& F, const MonFunctor& G, const JElement& b,
                            const std::vector<CenterObject>& gens, bool check_naturality) {
  const Cat& C = Z.cat();
  ValidationReport rep;
  std::string tb = " for " + b.str();
  auto check_one = [&](const CenterObject& v, const std::string& tag) {
    Morphism pa = phi_impl(C, F, b, v);
    rep.checks += 3;
    if (!is_center_morphism(C, pa, induced_autoeq(F, v), induced_autoeq(G, v)))
      rep.fail("Phi is not a center morphism at " + tag + tb);
    if (phi_via_comodule(Z, F, b, v) != pa) rep.fail("the two Phi composites differ at " + tag + tb);
    try {
      C.inverse(pa);
    } catch (const NotInvertible&) {
      rep.fail("Phi is not invertible at " + tag + tb);
    }
    return pa;
  };
  std::vector<Morphism> comps;
  for (size_t k = 0; k < gens.size(); ++k) comps.push_back(check_one(gens[k], "#" + std::to_string(k)));
  CenterObject u = unit_center(C);
  ++rep.checks;
  if (phi_impl(C, F, b, u) * scalar_mor(C, F.F0) != scalar_mor(C, G.F0)) rep.fail("Phi is not unital" + tb);
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t c = 0; c < gens.size(); ++c) {
      std::string tag = "(#" + std::to_string(a) + ",#" + std::to_string(c) + ")";
      CenterObject vw = tensor_center(C, gens[a], gens[c]);
      Morphism pvw = check_one(vw, tag);
      const Obj &V = gens[a].carrier, &W = gens[c].carrier;
      ++rep.checks;
      if (pvw * F.f2(V, W) != G.f2(V, W) * C.tensor(comps[a], comps[c])) rep.fail("Phi not monoidal at " + tag + tb);
    }
  if (check_naturality)
    for (size_t a = 0; a < gens.size(); ++a)
      for (size_t c = 0; c < gens.size(); ++c)
        for (const auto& f : center_hom(C, gens[a], gens[c])) {
          ++rep.checks;
          if (G.on(f) * comps[a] != comps[c] * F.on(f))
            rep.fail("Phi not natural on a morphism #" + std::to_string(a) + " -> #" + std::to_string(c) + tb);
        }
  return rep;
}

JElement psi(const Comonad& Z, const MonFunctor& G, const NatTransOnCenter& h) {
  const Cat& C = Z.cat();
  int n = C.n(), u = C.unit();
  if (int(h.objects.size()) < n || int(h.components.size()) < n)
    throw ShapeMismatch("psi needs components on every free generator");
  for (int i = 0; i < n; ++i)
    if (h.objects[i].carrier != Z.Zobj(C.simple(i))) throw ShapeMismatch("generator #" + std::to_string(i) + " is not R(X_i)");
  Obj one = C.unit_obj();
  Morphism f = Z.epsilon(one) * Z.Zmor(scalar_mor(C, G.F0.inverse())) * xi_impl(Z, G, one) * h.components[u];
  int beta;
  try {
    beta = match_character(Z, f);
  } catch (const NoMatch& e) {
    throw NotMonoidalInput(std::string("h on R(1) gives no character: ") + e.what());
  }
  MonFunctor I = conj_functor(C, beta);
  auto src = std::make_shared<const MonFunctor>(compose_functors(I, identity_functor(C)));
  std::vector<Scalar> lambda(n);
  Obj a = Z.Zobj(one);
  for (int i = 0; i < n; ++i) {
    Obj V = C.simple(i), Vb = I.on(V), GV = G.on(V);
    Morphism ph = xi_impl(Z, G, V) * h.components[i] * zeta_impl(Z, I, beta, V);
    if (ph * Z.Z2(Vb, one) != Z.Z2(GV, one) * C.tensor(ph, C.id(a)))
      throw HopfModuleViolation("phi_V is not a map of Hopf modules at V=" + C.data().label(i));
    Morphism jv = Z.epsilon(GV) * ph * Z.iota(Vb);
    if (Vb != GV) throw NotMonoidalInput("recovered j has no component at " + C.data().label(i));
    lambda[i] = jv.blocks[G.map[i]](0, 0);
    if (jv != C.id(GV).scaled(lambda[i]))
      throw NotMonoidalInput("recovered j is not scalar at " + C.data().label(i));
  }
  JElement out = make_jelement(beta, src, G, std::move(lambda));
  auto rep = verify_nat(out.j);
  if (!rep.ok) throw NotMonoidalInput("recovered j is not monoidal: " + rep.violations.front());
  return out;
}

JElement jelement_product(const Comonad& Z, const MonFunctor& id, const JElement& a, const JElement& b) {
  const Cat& C = Z.cat();
  Obj g = C.tensor(C.simple(a.beta), C.simple(b.beta));
  int gamma = -1;
  for (int k = 0; k < C.n(); ++k)
    if (g.mult[k]) gamma = k;
  Term bt = C.leaf(a.beta), bpt = C.leaf(b.beta), gt = C.leaf(gamma);
  Term bd = C.dual_term(bt), bpd = C.dual_term(bpt);
  std::vector<Scalar> lambda(C.n());
  for (int i = 0; i < C.n(); ++i) {
    Term X = C.leaf(i);
    Term inner = C.tp(C.tp(bpt, X), bpd);
    Arrow s1 = C.tens(C.tens(C.expand(C.tp(bt, bpt)), C.id(X)), C.J(bt, bpt));
    Arrow s2 = C.rebracket(s1.cod, C.tp(C.tp(bt, inner), bd));
    Arrow jb = C.arrow(C.leaf(inner.raw()), X, b.j.on(C.simple(i)));
    Arrow s3 = C.tens(C.tens(C.id(bt), C.seq({C.atomize(inner), jb})), C.id(bd));
    Arrow s4 = C.atomize(s3.cod);
    Arrow ja = C.arrow(s4.cod, X, a.j.on(C.simple(i)));
    Arrow all = C.seq({s1, s2, s3, s4, ja});
    lambda[i] = all.m.blocks[i](0, 0);
  }
  auto src = std::make_shared<const MonFunctor>(compose_functors(conj_functor(C, gamma), id));
  return make_jelement(gamma, src, id, std::move(lambda));
}

Classification classify(const Comonad& Z, const MonFunctor& F, const MonFunctor& G, const ClassifyOptions& opt) {
  Classification cl;
  cl.elements = enumerate_J(F, G);
  auto gens = free_generators(Z);
  int m = int(cl.elements.size());
  std::vector<ValidationReport> reps(m);
  cl.structures.resize(m);
  parallel_for(m, opt.jobs, [&](int k) {
    const JElement& b = cl.elements[k];
    reps[k] = verify_phi(Z, F, G, b, gens, opt.check_naturality);
    reps[k].merge(verify_nat(b.j));
    cl.structures[k] = phi_extensional(Z, F, G, b, gens);
  });
  for (const auto& r : reps) cl.report.merge(r);
  for (size_t a = 0; a < cl.structures.size(); ++a)
    for (size_t c = a + 1; c < cl.structures.size(); ++c) {
      ++cl.report.checks;
      if (extensionally_equal(cl.structures[a], cl.structures[c]))
        cl.report.fail("Phi is not injective: " + cl.elements[a].str() + " and " + cl.elements[c].str());
    }
  if (opt.roundtrips && is_identity_functor(F)) cl.report.merge(verify_roundtrips(Z, G, cl));
  return cl;
}

ValidationReport verify_roundtrips(const Comonad& Z, const MonFunctor& G, const Classification& cl) {
  const Cat& C = Z.cat();
  MonFunctor id = identity_functor(C);
  ValidationReport rep;
  auto gens = free_generators(Z);
  for (size_t k = 0; k < cl.elements.size(); ++k) {
    const JElement& b = cl.elements[k];
    rep.checks += 2;
    try {
      JElement back = psi(Z, G, cl.structures[k]);
      if (!(back == b)) rep.fail("psi(phi(b)) != b for " + b.str() + ", got " + back.str());
      NatTransOnCenter h2 = phi_extensional(Z, id, G, back, gens);
      if (!extensionally_equal(h2, cl.structures[k])) rep.fail("phi(psi(h)) != h for " + b.str());
    } catch (const Error& e) {
      rep.fail("psi failed on Phi(" + b.str() + "): " + e.what());
    }
    ++rep.checks;
    for (int v = 0; v < C.n(); ++v)
      for (int x = 0; x < C.n(); ++x)
        if (!verify_lemma_phi_pi(Z, b, G, C.simple(v), C.simple(x))) {
          rep.fail("G(pi_V(X)) Phi_{R(V)} != j pi_V(beta X) at V=" + C.data().label(v) + ", X=" +
                   C.data().label(x) + " for " + b.str());
          v = x = C.n();
        }
  }
  return rep;
}

NatGroup nat_group(const Comonad& Z, const MonFunctor& id, const Classification& cl) {
  NatGroup g;
  size_t m = cl.structures.size();
  g.table.assign(m, std::vector<int>(m, -1));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      NatTransOnCenter comp = cl.structures[b];
      for (size_t k = 0; k < comp.components.size(); ++k)
        comp.components[k] = cl.structures[a].components[k] * cl.structures[b].components[k];
      int hit = -1;
      for (size_t c = 0; c < m; ++c)
        if (extensionally_equal(comp, cl.structures[c])) hit = int(c);
      g.report.checks += 3;
      std::string tag = " at (" + cl.elements[a].str() + ") (" + cl.elements[b].str() + ")";
      if (hit < 0) {
        g.report.fail("composite is not among the Phi outputs" + tag);
        continue;
      }
      g.table[a][b] = hit;
      JElement p = jelement_product(Z, id, cl.elements[a], cl.elements[b]);
      auto rep = verify_nat(p.j);
      if (!rep.ok) g.report.fail("product element is not monoidal" + tag + ": " + rep.violations.front());
      if (!(p == cl.elements[hit])) g.report.fail("Phi(a) Phi(b) != Phi(a b)" + tag + ", product " + p.str());
    }
  return g;
}

bool groups_isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  int n = int(a.size());
  if (int(b.size()) != n) return false;
  auto orders = [n](const std::vector<std::vector<int>>& t) {
    int e = -1;
    for (int x = 0; x < n && e < 0; ++x) {
      bool ok = true;
      for (int y = 0; y < n; ++y) ok = ok && t[x][y] == y;
      if (ok) e = x;
    }
    std::vector<int> o(n, 0);
    if (e < 0) return o;
    for (int x = 0; x < n; ++x) {
      int p = x, k = 1;
      while (p != e && k <= n) {
        p = t[p][x];
        ++k;
      }
      o[x] = k;
    }
    return o;
  };
  auto oa = orders(a), ob = orders(b);
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb || sa.front() == 0) return false;
  }
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || ob[y] != oa[x]) continue;
      f[x] = y;
      bool ok = true;
      for (int p = 0; p <= x && ok; ++p)
        for (int q = 0; q <= x && ok; ++q) {
          int r = a[p][q];
          if (r <= x && b[f[p]][f[q]] != f[r]) ok = false;
        }
      if (ok) {
        used[y] = true;
        if (go(x + 1)) return true;
        used[y] = false;
      }
      f[x] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace pivctr
