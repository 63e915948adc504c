#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pivctr/pivclass.hpp"

namespace pivctr {

// Finite group by multiplication table (0 is the identity) with a
// normalized 3-cocycle; absent omega values are 1.
struct PointedData {
  int order = 0;
  std::vector<std::vector<int>> table;
  int root_order = 1;
  std::map<std::array<int, 3>, Scalar> omega;

  Scalar w(int a, int b, int c) const;
  int inv(int a) const;
};

PointedData load_pointed_json(const nlohmann::json& j);
PointedData load_pointed_file(const std::string& path);
// Group axioms, normalization and the cocycle identity. Throws
// CocycleViolation with the failing triple or quadruple.
void validate_pointed(const PointedData& p);
// N[a][b][c] = [ab = c], dual(a) = a^-1, F at (a,b,c) = omega(a,b,c).
FusionData pointed_category(const PointedData& p);
// Group and cocycle read back from a pointed category; throws NotPointed.
PointedData pointed_from_fusion(const FusionData& d);

// |G| cap, 12 unless PIVCTR_MAX_GROUP is set.
int max_group_order();
// Throws NotPointed or GroupTooLarge.
void require_pointed(const Cat& C);

// All simple objects of Z(C) by exhaustive search over monomial objects
// induced from twisted characters of centralizer subgroups. Each is
// validated, irreducible and pairwise non-isomorphic; completeness is
// certified by sum d^2 = |G|^2 or IncompleteEnumeration is thrown.
std::vector<CenterObject> center_simples_pointed(const Cat& C);

// Every algebra map A -> 1, by exhaustive search over supports in the
// coordinates of Hom(A, 1). Throws NotPointed.
std::vector<Morphism> alg_maps_pointed(const Comonad& Z);

// Monoidal natural isomorphisms id~ -> G~ found without the bijection:
// lambda_S b_S on every center simple S, with constraints from the
// decompositions of S (x) T, solved multiplicatively, then re-expressed on
// the free comodules R(X_i).
struct OracleNat {
  std::vector<CenterObject> simples;
  std::vector<Morphism> basis;  // b_S: S -> G~(S)
  std::vector<std::vector<Scalar>> lambdas;
  std::vector<NatTransOnCenter> structures;
};
OracleNat oracle_nat(const Comonad& Z, const MonFunctor& G, const std::vector<CenterObject>& simples);
OracleNat pivotal_pointed(const Comonad& Z, const MonFunctor& dd, const std::vector<CenterObject>& simples);

// Invertible simples of Z(C) under the tensor product.
struct InvertibleCenter {
  std::vector<int> members;  // indices into the simples list
  std::vector<std::vector<int>> table;
};
InvertibleCenter invertible_center(const Cat& C, const std::vector<CenterObject>& simples);

// Whether two lists of extensional transformations agree as sets.
bool same_structures(const std::vector<NatTransOnCenter>& a, const std::vector<NatTransOnCenter>& b);

}  // namespace pivctr
