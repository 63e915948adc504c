#include "common.hpp"
#include "doctest.h"
#include "pivctr/adjalg.hpp"

using namespace pivctr;
using testing_support::load;

TEST_CASE("adjoint algebra axioms") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    AdjointAlgebra A = adjoint_algebra(Z);
    auto rep = verify_adjoint_algebra(Z, A);
    CHECK_MESSAGE(rep.ok, (rep.ok ? "" : rep.violations.front()));
    CHECK(validate_center_object(C, A.carrier).ok);
  }
}

TEST_CASE("character counts and independence") {
  const std::pair<const char*, size_t> expect[] = {{"vec_z2", 2}, {"vec_z3", 3}, {"vec_s3", 6},
                                                   {"vec_z2_omega", 2}, {"fibonacci", 1}, {"ising", 2}};
  for (auto [name, count] : expect) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    AdjointAlgebra A = adjoint_algebra(Z);
    auto chs = enumerate_characters(Z);
    CHECK(chs.size() == count);
    auto solved = solve_algebra_maps(Z, A);
    CHECK(solved.size() == count);
    auto rep = verify_characters(Z, A, &solved);
    CHECK_MESSAGE(rep.ok, (rep.ok ? "" : rep.violations.front()));
  }
}

TEST_CASE("characters on Vec_Z2") {
  Cat C(load("vec_z2"));
  Comonad Z(C);
  AdjointAlgebra A = adjoint_algebra(Z);
  Obj one = C.unit_obj();
  Character e = character(Z, 0), g = character(Z, 1);
  CHECK(e.functional == Z.epsilon(one));
  CHECK(e.functional != g.functional);
  CHECK(g.functional.blocks[0](0, 0).is_zero());
  CHECK(!g.functional.blocks[0](0, 1).is_zero());
  CHECK_THROWS_AS(character(Z, 2), NotInvertible);
  Cat F(load("fibonacci"));
  Comonad ZF(F);
  CHECK_THROWS_AS(character(ZF, 1), NotInvertible);

  CHECK(match_character(Z, g.functional) == 1);
  CHECK(match_character(Z, Z.epsilon(one)) == 0);
  CHECK_THROWS_AS(match_character(Z, Z.epsilon(one).scaled(Scalar(2))), NoMatch);
  CHECK(!is_algebra_map(Z, A, Z.epsilon(one).scaled(Scalar(2))));
}

TEST_CASE("lift to the center") {
  Cat C(load("vec_z2"));
  Comonad Z(C);
  AdjointAlgebra A = adjoint_algebra(Z);
  Obj one = C.unit_obj();
  CHECK(lift_to_center(Z, Z.epsilon(one)).is_identity());
  Morphism g = character(Z, 1).functional;
  Morphism tg = lift_to_center(Z, g);
  CHECK(!tg.is_identity());
  CHECK((tg * tg).is_identity());
  CHECK(is_algebra_endomorphism(Z, A, tg));
  Morphism bad = Z.epsilon(one) - g;
  CHECK(!is_algebra_endomorphism(Z, A, lift_to_center(Z, bad)));
  CHECK(convolution(Z, g, g) == Z.epsilon(one));

  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat D(load(name));
    Comonad ZD(D);
    AdjointAlgebra AD = adjoint_algebra(ZD);
    auto endos = solve_algebra_endomorphisms(ZD, AD, solve_algebra_maps(ZD, AD));
    CHECK(endos.size() == invertibles(D.data()).size());
    auto rep = verify_lift_bijection(ZD, AD, endos);
    CHECK_MESSAGE(rep.ok, (rep.ok ? "" : rep.violations.front()));
  }
}

TEST_CASE("canonical action") {
  Cat C(load("vec_z2"));
  Comonad Z(C);
  AdjointAlgebra A = adjoint_algebra(Z);
  Obj one = C.unit_obj(), g = C.simple(1);
  CHECK(canonical_action(Z, one) == Z.epsilon(one));
  Morphism rg = canonical_action(Z, g);
  CHECK(rg.blocks[1](0, 0).is_zero());
  CHECK(!rg.blocks[1](0, 1).is_zero());
  CHECK(sigma_hat_check(Z, A, free_comodule(Z, g)));
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat D(load(name));
    Comonad ZD(D);
    AdjointAlgebra AD = adjoint_algebra(ZD);
    for (int i = 0; i < D.n(); ++i) {
      auto rep = verify_canonical_action(ZD, AD, D.simple(i));
      CHECK_MESSAGE(rep.ok, (rep.ok ? "" : rep.violations.front()));
      CHECK(sigma_hat_check(ZD, AD, free_comodule(ZD, D.simple(i))));
    }
    CHECK(sigma_hat_check(ZD, AD, unit_comodule(ZD)));
  }
}
