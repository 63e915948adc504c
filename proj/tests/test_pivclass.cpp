#include "common.hpp"
#include "doctest.h"
#include "pivctr/pivclass.hpp"

using namespace pivctr;
using testing_support::load;

namespace {

std::vector<Obj> simples(const Cat& C) {
  std::vector<Obj> out;
  for (int i = 0; i < C.n(); ++i) out.push_back(C.simple(i));
  return out;
}

#define CHECK_REPORT(rep) CHECK_MESSAGE((rep).ok, ((rep).ok ? "" : (rep).violations.front()))

}  // namespace

TEST_CASE("chi, xi and zeta") {
  for (const char* name : {"vec_z2", "vec_z3", "vec_z2_omega", "fibonacci", "ising"}) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    auto gens = free_generators(Z);
    auto vs = simples(C);
    for (int b : invertibles(C.data())) {
      CAPTURE(b);
      CHECK_REPORT(verify_chi(Z, b, gens));
      CHECK_REPORT(verify_zeta(Z, b, vs));
    }
    CHECK_REPORT(verify_xi(Z, identity_functor(C), vs));
    CHECK_REPORT(verify_xi(Z, double_dual_functor(C), vs));
  }
  Cat F(load("fibonacci"));
  CHECK_THROWS_AS(chi_beta(F, 1, unit_center(F)), NotInvertible);
}

TEST_CASE("chi on the unit object is the identity") {
  Cat C(load("vec_z3"));
  Comonad Z(C);
  for (int b = 0; b < C.n(); ++b) CHECK(chi_beta_comodule(Z, b, unit_comodule(Z)).is_identity());
}

TEST_CASE("J(id, id) sizes") {
  const std::pair<const char*, size_t> expect[] = {{"vec_z2", 4}, {"vec_z3", 9}, {"vec_s3", 2},
                                                   {"vec_z2_omega", 4}, {"fibonacci", 1}, {"ising", 4}};
  for (auto [name, count] : expect) {
    CAPTURE(name);
    Cat C(load(name));
    MonFunctor id = identity_functor(C);
    CHECK(enumerate_J(id, id).size() == count);
  }
}

TEST_CASE("pivotal structures and roundtrips") {
  const std::pair<const char*, size_t> expect[] = {{"vec_z2", 4}, {"vec_z3", 9}, {"vec_s3", 2},
                                                   {"vec_z2_omega", 4}, {"fibonacci", 1}, {"ising", 4}};
  for (auto [name, count] : expect) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    MonFunctor id = identity_functor(C), dd = double_dual_functor(C);
    Classification piv = classify(Z, id, dd);
    CHECK(piv.structures.size() == count);
    CHECK_REPORT(piv.report);
    Classification cl = classify(Z, id, id);
    CHECK_REPORT(cl.report);
    NatGroup g = nat_group(Z, id, cl);
    CHECK_REPORT(g.report);
  }
}

TEST_CASE("psi rejects non-monoidal input") {
  Cat C(load("vec_z2"));
  Comonad Z(C);
  MonFunctor id = identity_functor(C);
  Classification cl = classify(Z, id, id, {true, false});
  REQUIRE(cl.structures.size() == 4);
  for (const auto& h : cl.structures) {
    NatTransOnCenter bad = h;
    bad.components[1] = bad.components[1].scaled(Scalar(2));
    CHECK_THROWS_AS(psi(Z, id, bad), NotMonoidalInput);
    NatTransOnCenter bad0 = h;
    bad0.components[0] = bad0.components[0].scaled(Scalar(2));
    CHECK_THROWS_AS(psi(Z, id, bad0), NotMonoidalInput);
  }
}

TEST_CASE("group isomorphism") {
  std::vector<std::vector<int>> z4(4, std::vector<int>(4)), v4(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      z4[a][b] = (a + b) % 4;
      v4[a][b] = a ^ b;
    }
  auto z4b = z4;
  // relabel 1 <-> 3
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto f = [](int x) { return x == 1 ? 3 : x == 3 ? 1 : x; };
      z4b[f(a)][f(b)] = f(z4[a][b]);
    }
  CHECK(groups_isomorphic(z4, z4b));
  CHECK(groups_isomorphic(v4, v4));
  CHECK(!groups_isomorphic(z4, v4));

  Cat C(load("vec_z2"));
  Comonad Z(C);
  MonFunctor id = identity_functor(C);
  NatGroup g = nat_group(Z, id, classify(Z, id, id, {false, false}));
  CHECK(groups_isomorphic(g.table, v4));
}
