#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pivctr/adjalg.hpp"

namespace pivctr {

// (beta, j) with j a monoidal natural transformation I^beta F -> G.
struct JElement {
  int beta = -1;
  std::shared_ptr<const MonFunctor> source;  // I^beta o F
  MonNatTrans j;

  bool operator==(const JElement& o) const { return beta == o.beta && j.lambda == o.j.lambda; }
  std::string str() const;
};

JElement make_jelement(int beta, std::shared_ptr<const MonFunctor> source, const MonFunctor& target,
                       std::vector<Scalar> lambda);

// Natural transformation F~ -> G~ given by its components on generators.
struct NatTransOnCenter {
  const MonFunctor* source = nullptr;
  const MonFunctor* target = nullptr;
  std::vector<CenterObject> objects;
  std::vector<Morphism> components;  // objects[k] -> G~(objects[k])
};

// R(X_i) for every simple, in index order.
std::vector<CenterObject> free_generators(const Comonad& Z);
// Equality of components on every shared generator.
bool extensionally_equal(const NatTransOnCenter& a, const NatTransOnCenter& b);

// chi^beta_V = (sigma_V(beta) (x) id)(id (x) coev_beta): V -> I^beta~(V)
Morphism chi_beta(const Cat& C, int beta, const CenterObject& v);
// pi_V(beta) o rho
Morphism chi_beta_comodule(const Comonad& Z, int beta, const Comodule& m);
// center morphism, comodule form, unit coherence and monoidality on pairs
ValidationReport verify_chi(const Comonad& Z, int beta, const std::vector<CenterObject>& vs);

// xi^G_V: G Z(V) -> Z G(V) from the defining square over all simples X
Morphism xi_G(const Comonad& Z, const MonFunctor& G, const Obj& v);
// defining square, invertibility, monoidality on pairs and unit
ValidationReport verify_xi(const Comonad& Z, const MonFunctor& G, const std::vector<Obj>& vs);

// zeta^beta_V = (xi^beta_V o chi^beta_{R(V)})^{-1}: Z(V^beta) -> Z(V)
Morphism zeta_beta(const Comonad& Z, int beta, const Obj& v);
// pi_{V^beta}(X) = pi_V(X beta) o zeta for all simple X, monoidality and unit
ValidationReport verify_zeta(const Comonad& Z, int beta, const std::vector<Obj>& vs);

// Disjoint union over invertible beta of Nat_x(I^beta F, G).
std::vector<JElement> enumerate_J(const MonFunctor& F, const MonFunctor& G);

// j_V o (sigma'_V(beta) (x) id)(id (x) coev_beta) with sigma' the half-braiding of F~(V)
Morphism phi(const Comonad& Z, const MonFunctor& F, const JElement& b, const CenterObject& v);
// j_V o pi_{FV}(beta) o xi^F_V o F(rho_V)
Morphism phi_via_comodule(const Comonad& Z, const MonFunctor& F, const JElement& b, const CenterObject& v);
NatTransOnCenter phi_extensional(const Comonad& Z, const MonFunctor& F, const MonFunctor& G,
                                 const JElement& b, const std::vector<CenterObject>& gens);
// G(pi_V(X)) o Phi(beta)_{R(V)} = j_{X V X*} o pi_V(beta X), source = id
bool verify_lemma_phi_pi(const Comonad& Z, const JElement& b, const MonFunctor& G, const Obj& v, const Obj& x);
// Phi(beta) on all generators and all their tensor pairs: center morphisms,
// invertible, both paths agree, natural and monoidal.
ValidationReport verify_phi(const Comonad& Z, const MonFunctor& F, const MonFunctor& G, const JElement& b,
                            const std::vector<CenterObject>& gens, bool check_naturality = true);

// Inverse of Phi at source id; h must have components on all free generators.
// Throws NotMonoidalInput or HopfModuleViolation.
JElement psi(const Comonad& Z, const MonFunctor& G, const NatTransOnCenter& h);

// (beta, j)(beta', j') = (beta beta', j o (beta j' beta*)) in J(id, id)
JElement jelement_product(const Comonad& Z, const MonFunctor& id, const JElement& a, const JElement& b);

struct Classification {
  std::vector<JElement> elements;
  std::vector<NatTransOnCenter> structures;
  ValidationReport report;
};

struct ClassifyOptions {
  bool check_naturality = true;
  bool roundtrips = true;
  int jobs = 1;
};

// Phi over enumerate_J(F, G), each output verified, pairwise distinct, and
// psi o phi = id, phi o psi = id when F = id.
Classification classify(const Comonad& Z, const MonFunctor& F, const MonFunctor& G,
                        const ClassifyOptions& opt = {});
ValidationReport verify_roundtrips(const Comonad& Z, const MonFunctor& G, const Classification& cl);

// Multiplication table of Phi(J(id, id)) under composition, with the check
// that Phi is multiplicative for jelement_product. Entry [a][b] is the index
// of Phi(a) o Phi(b).
struct NatGroup {
  std::vector<std::vector<int>> table;
  ValidationReport report;
};
NatGroup nat_group(const Comonad& Z, const MonFunctor& id, const Classification& cl);

// Whether two finite group tables are isomorphic, by backtracking.
bool groups_isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);

}  // namespace pivctr
