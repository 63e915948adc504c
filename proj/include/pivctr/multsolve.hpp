#pragma once

#include <string>
#include <vector>

#include "pivctr/scalar.hpp"

namespace pivctr {

// prod_v x_v^{exps[v]} = rhs
struct MultEquation {
  std::vector<long> exps;
  Scalar rhs;
  std::string witness;
};

struct MultSolveResult {
  std::vector<std::vector<Scalar>> solutions;
  bool consistent = true;
  std::string witness;  // first violated equation when inconsistent
};

// Diagonal form U A V = D of an integer matrix with unimodular U, V.
struct IntDiagonal {
  std::vector<std::vector<long>> U, V;
  std::vector<long> d;  // d[r] for r < rank, positive
  int rank = 0;
};
IntDiagonal int_diagonalize(std::vector<std::vector<long>> A, int ncols);

// All solutions in Q(zeta_N)^n of a system of monomial equations with
// nonzero right-hand sides. Throws InfiniteSolutionSet if the exponent
// lattice has rank < n and RootOutsideField if some solution lies outside
// Q(zeta_N).
MultSolveResult solve_multiplicative(int nvars, const std::vector<MultEquation>& eqs, int root_order);

}  // namespace pivctr
