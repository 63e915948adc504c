#pragma once

#include <string>
#include <vector>

#include "pivctr/fuscat.hpp"
#include "pivctr/multsolve.hpp"

namespace pivctr {

// Tensor autoequivalence: a permutation of simples plus monoidal structure.
// F2[i][j] is a raw morphism X_{f(i)} (x) X_{f(j)} -> F(X_i (x) X_j) and F0
// the scalar of 1 -> F(1) = 1.
struct MonFunctor {
  const Cat* C = nullptr;
  std::string name;
  std::vector<int> map;
  std::vector<std::vector<Morphism>> F2;
  Scalar F0 = Scalar(1);

  int operator()(int i) const { return map[i]; }
  Obj on(const Obj& a) const;
  Morphism on(const Morphism& f) const;
  // leaf(F raw dom) -> leaf(F raw cod)
  Arrow on(const Arrow& f) const;
  // Term with F applied at each leaf.
  Term on_term(const Term& t) const;
  // F2 on raw objects: F(a) (x) F(b) -> F(a (x) b)
  Morphism f2(const Obj& a, const Obj& b) const;
  // Iterated structure F(t_1)...F(t_n) -> F(t), typed from on_term(t) to leaf(F raw t)
  Arrow fn(const Term& t) const;
  bool is_identity_map() const;
};

MonFunctor identity_functor(const Cat& C);
MonFunctor double_dual_functor(const Cat& C);
MonFunctor conj_functor(const Cat& C, int beta);
// F after G
MonFunctor compose_functors(const MonFunctor& F, const MonFunctor& G);

// associativity and unit axioms on all simple triples / simples
ValidationReport validate_functor(const MonFunctor& F);

// gamma^F_X: F(X*) -> F(X)*, solved from e_X = ev_{F(X)} o (gamma (x) id)
Morphism duality_transform(const MonFunctor& F, const Obj& x);
Scalar duality_scalar(const MonFunctor& F, int i);
// gamma^F is monoidal, on all simple pairs
ValidationReport verify_duality_monoidal(const MonFunctor& F);
// the formula for the duality transformation of I^beta
bool verify_conj_duality(const Cat& C, int beta);

struct MonNatTrans {
  const MonFunctor* source = nullptr;
  const MonFunctor* target = nullptr;
  std::vector<Scalar> lambda;  // component on X_i is lambda[i] * id_{X_{f(i)}}

  Morphism on(const Obj& a) const;
  bool operator==(const MonNatTrans& o) const { return lambda == o.lambda; }
};

// Monoidality and unit equation on all simple pairs.
ValidationReport verify_nat(const MonNatTrans& j);
// Monoidality on a tensor word of arbitrary objects.
bool verify_nat_word(const MonNatTrans& j, const Term& t);

// Every monoidal natural transformation F -> G. When a G2/F2 block ratio is
// not a scalar, the result is empty and *witness names the block.
std::vector<MonNatTrans> solve_nat_tensor(const MonFunctor& F, const MonFunctor& G,
                                          std::string* witness = nullptr);

MonNatTrans invert_nat(const MonNatTrans& j);
// (j_X^{-1})* o gamma^F_X = gamma^G_X o j_{X*} for every simple X
bool verify_lemma_mon_nat_inv(const MonNatTrans& j);

}  // namespace pivctr
