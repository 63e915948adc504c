#include <random>

#include "common.hpp"
#include "doctest.h"
#include "pivctr/comonad.hpp"

using namespace pivctr;
using testing_support::load;

TEST_CASE("realization of Z") {
  Cat C(load("vec_z2"));
  Comonad Z(C);
  CHECK(Z.Zobj(C.unit_obj()).mult == std::vector<int>{2, 0});
  CHECK(verify_realization(Z, C.simple(1)).ok);
  CHECK(Z.Zmor(C.id(C.simple(1))).is_identity());
  CHECK(Z.pi(C.unit_obj(), C.unit_obj()) == Z.epsilon(C.unit_obj()));
  Cat S(load("vec_s3"));
  Comonad ZS(S);
  CHECK(ZS.Zobj(S.unit_obj()).mult == std::vector<int>{6, 0, 0, 0, 0, 0});
  CHECK(ZS.Zobj(S.simple(1)).mult == std::vector<int>{0, 2, 2, 2, 0, 0});
}

TEST_CASE("dinaturality of pi") {
  std::mt19937 rng(3);
  Cat C(load("ising"));
  Comonad Z(C);
  Obj v({0, 1, 1}), x({1, 1, 0}), y({0, 2, 1});
  Morphism f = C.zero(x, y);
  std::uniform_int_distribution<int> d(-2, 2);
  for (auto& b : f.blocks)
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) b(r, c) = Scalar(d(rng));
  Morphism lhs = C.tensor(C.tensor(f, C.id(v)), C.id(C.dual(x))) * Z.pi(v, x);
  Morphism rhs = C.tensor(C.tensor(C.id(y), C.id(v)), C.dual(f)) * Z.pi(v, y);
  CHECK(lhs == rhs);
}

TEST_CASE("comonad laws on all bundled categories") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    for (int i = 0; i < C.n(); ++i) {
      auto rep = verify_comonad_laws(Z, C.simple(i));
      for (auto& v : rep.violations) MESSAGE(v);
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("Z2 on Vec_Z2 is the function algebra") {
  Cat C(load("vec_z2"));
  Comonad Z(C);
  Morphism m = Z.Z2(C.unit_obj(), C.unit_obj());
  // A = 1 (+) 1, m: A A (4 copies) -> A, pointwise product
  REQUIRE(m.blocks[0].rows() == 2);
  REQUIRE(m.blocks[0].cols() == 4);
  int nz = m.blocks[0].nonzeros();
  CHECK(nz == 2);
  CHECK((Z.epsilon(C.unit_obj()) * Z.Z0()).is_identity());
}

TEST_CASE("comodule dictionary") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    Comodule u = unit_comodule(Z);
    CHECK(validate_comodule(Z, u).ok);
    CenterObject uc = center_from_comodule(Z, u);
    CHECK(center_equal(uc, unit_center(C)));
    for (int i = 0; i < C.n(); ++i) {
      Comodule r = free_comodule(Z, C.simple(i));
      CHECK(validate_comodule(Z, r).ok);
      CenterObject rc = center_from_comodule(Z, r);
      auto rep = validate_center_object(C, rc);
      CHECK(rep.ok);
      Comodule back = comodule_from_center(Z, rc);
      CHECK(back.rho == r.rho);
      CHECK(center_equal(center_from_comodule(Z, back), rc));
    }
  }
}

TEST_CASE("comodule of (g, -1) in Vec_Z2") {
  Cat C(load("vec_z2"));
  Comonad Z(C);
  CenterObject v;
  v.carrier = C.simple(1);
  v.hb = {C.id(C.simple(1)), C.id(C.simple(0)).scaled(Scalar(-1))};
  Comodule m = comodule_from_center(Z, v);
  CHECK(validate_comodule(Z, m).ok);
  // the g-summand of Z(g) carries the sign
  Morphism pg = Z.Z(v.carrier).proj[1] * m.rho;
  CHECK(pg.blocks[1](0, 0) == Scalar(-1));
  Comodule bad = m;
  bad.rho = bad.rho.scaled(Scalar(2));
  CHECK_THROWS_AS(center_from_comodule(Z, bad), InvalidComodule);
  CenterObject badc = v;
  badc.hb[1] = badc.hb[1].scaled(Scalar(2));
  CHECK_THROWS_AS(comodule_from_center(Z, badc), InvalidCenterObject);
}

TEST_CASE("free comodules are natural") {
  std::mt19937 rng(9);
  Cat C(load("fibonacci"));
  Comonad Z(C);
  Obj a({1, 1}), b({0, 2});
  Morphism f = C.zero(a, b);
  f.blocks[1](0, 0) = Scalar(2);
  f.blocks[1](1, 0) = Scalar(-1);
  CenterObject ra = free_center(Z, a), rb = free_center(Z, b);
  CHECK(is_center_morphism(C, Z.Zmor(f), ra, rb));
}

TEST_CASE("Hopf operator identities") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    std::vector<Obj> xs;
    std::vector<Comodule> ms{unit_comodule(Z)};
    for (int i = 0; i < C.n(); ++i) {
      xs.push_back(C.simple(i));
      ms.push_back(free_comodule(Z, C.simple(i)));
    }
    auto rep = verify_lemma_hopf_ops(Z, xs, ms);
    for (auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.ok);
  }
}
