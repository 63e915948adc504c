#pragma once

#include <vector>

#include "pivctr/comonad.hpp"

namespace pivctr {

// A = Z(1) with m = Z2(1,1), u = Z0 and the half-braiding of R(1).
struct AdjointAlgebra {
  CenterObject carrier;
  Morphism mult, unit_mor;
};

struct Character {
  Morphism functional;  // A -> 1
  int source_invertible = -1;
};

AdjointAlgebra adjoint_algebra(const Comonad& Z);
// associativity, unitality and m o c_{A,A} = m
ValidationReport verify_adjoint_algebra(const Comonad& Z, const AdjointAlgebra& A);

// f o m = f (x) f and f o u = id_1
bool is_algebra_map(const Comonad& Z, const AdjointAlgebra& A, const Morphism& f);

// ch_beta = coev_beta^{-1} o pi_1(beta); throws NotInvertible
Character character(const Comonad& Z, int beta);
std::vector<Character> enumerate_characters(const Comonad& Z);
bool linearly_independent(const std::vector<Morphism>& fs);
// Characters are algebra maps, pairwise distinct and linearly independent.
// With `solved`, the independently solved algebra maps must equal them as a set.
ValidationReport verify_characters(const Comonad& Z, const AdjointAlgebra& A,
                                   const std::vector<Morphism>* solved = nullptr);

// Every algebra map A -> 1, solved directly from f o m = f (x) f and
// f o u = 1 in the coordinates of Hom(A, 1). Throws IncompleteEnumeration
// when m does not vanish on mixed copies, the case the solver cannot split.
std::vector<Morphism> solve_algebra_maps(const Comonad& Z, const AdjointAlgebra& A);
// Algebra endomorphisms inside center_hom(A, A). eps_1 embeds them into the
// algebra maps, so each solved map has at most one preimage to test.
std::vector<Morphism> solve_algebra_endomorphisms(const Comonad& Z, const AdjointAlgebra& A,
                                                  const std::vector<Morphism>& alg_maps);

// f~ = Z(f) o delta_1
Morphism lift_to_center(const Comonad& Z, const Morphism& f);
// f * g = f o Z(g) o delta_1
Morphism convolution(const Comonad& Z, const Morphism& f, const Morphism& g);
// T: A -> A is a center morphism with T m = m (T (x) T) and T u = u
bool is_algebra_endomorphism(const Comonad& Z, const AdjointAlgebra& A, const Morphism& T);
// The lift is a bijection from characters onto the algebra endomorphisms
// in `endos`, and (f * g)~ = f~ g~ on all character pairs.
ValidationReport verify_lift_bijection(const Comonad& Z, const AdjointAlgebra& A,
                                       const std::vector<Morphism>& endos);

// Index of the unique character equal to f; throws NoMatch.
int match_character(const Comonad& Z, const Morphism& f);

// rho_V = (id (x) ev_V)(pi_1(V) (x) id): A (x) V -> V
Morphism canonical_action(const Comonad& Z, const Obj& v);
// module axioms and rho_V = (id (x) eps_1) o sigma_A(V)
ValidationReport verify_canonical_action(const Comonad& Z, const AdjointAlgebra& A, const Obj& v);

// (H^r_{M,1})^{-1} o H^l_{1,M}: A (x) M -> M (x) A
Morphism sigma_hat(const Comonad& Z, const Comodule& m);
bool sigma_hat_check(const Comonad& Z, const AdjointAlgebra& A, const Comodule& m);

}  // namespace pivctr
