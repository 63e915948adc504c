#include "common.hpp"
#include "doctest.h"
#include "pivctr/functor.hpp"

using namespace pivctr;
using testing_support::load;

TEST_CASE("integer diagonalization") {
  IntDiagonal D = int_diagonalize({{2, 4}, {6, 8}, {0, 3}}, 2);
  CHECK(D.rank == 2);
  // U A V is diagonal
  std::vector<std::vector<long>> A = {{2, 4}, {6, 8}, {0, 3}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) {
      long s = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b) s += D.U[r][a] * A[a][b] * D.V[b][c];
      CHECK(s == (r == c ? D.d[r] : 0));
    }
}

TEST_CASE("multiplicative solver") {
  // x^2 = 1 over Q
  auto r = solve_multiplicative(1, {{{2}, Scalar(1), "sq"}}, 1);
  CHECK(r.solutions.size() == 2);
  // x^3 = 1 needs cube roots of unity
  CHECK_THROWS_AS(solve_multiplicative(1, {{{3}, Scalar(1), "cube"}}, 4), RootOutsideField);
  CHECK(solve_multiplicative(1, {{{3}, Scalar(1), "cube"}}, 6).solutions.size() == 3);
  // xy = 1 alone is underdetermined
  CHECK_THROWS_AS(solve_multiplicative(2, {{{1, 1}, Scalar(1), "xy"}}, 1), InfiniteSolutionSet);
  // inconsistent: x = 1, x = -1
  auto bad = solve_multiplicative(1, {{{1}, Scalar(1), "a"}, {{1}, Scalar(-1), "b"}}, 1);
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("bundled functors are monoidal") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat C(load(name));
    auto check = [&](const MonFunctor& F) {
      auto rep = validate_functor(F);
      for (auto& v : rep.violations) MESSAGE(v);
      CHECK(rep.ok);
      auto dm = verify_duality_monoidal(F);
      for (auto& v : dm.violations) MESSAGE(v);
      CHECK(dm.ok);
    };
    MonFunctor id = identity_functor(C), dd = double_dual_functor(C);
    check(id);
    check(dd);
    for (int b : invertibles(C.data())) {
      MonFunctor I = conj_functor(C, b);
      check(I);
      check(compose_functors(I, dd));
      CHECK(verify_conj_duality(C, b));
    }
  }
}

TEST_CASE("double dual on Vec_Z2 is trivial") {
  Cat C(load("vec_z2"));
  MonFunctor dd = double_dual_functor(C);
  CHECK(dd.is_identity_map());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(dd.F2[i][j].is_identity());
  CHECK(dd.F0.is_one());
  CHECK(duality_scalar(conj_functor(C, 1), 1).is_one());
}

TEST_CASE("conjugation functor on Vec_S3") {
  Cat C(load("vec_s3"));
  MonFunctor I = conj_functor(C, 1);
  // s1 conjugates r to r2 and fixes e
  CHECK(I(0) == 0);
  CHECK(I(4) == 5);
  CHECK(I(1) == 1);
  CHECK(I(2) == 3);
  Cat fib(load("fibonacci"));
  CHECK_THROWS_AS(conj_functor(fib, 1), NotInvertible);
}

TEST_CASE("solve_nat_tensor counts") {
  Cat z2(load("vec_z2")), s3(load("vec_s3"));
  MonFunctor id2 = identity_functor(z2);
  auto sol = solve_nat_tensor(id2, id2);
  CHECK(sol.size() == 2);
  MonFunctor id6 = identity_functor(s3);
  CHECK(solve_nat_tensor(id6, id6).size() == 2);
  MonFunctor I = conj_functor(s3, 1);
  std::string w;
  CHECK(solve_nat_tensor(I, id6, &w).empty());
  CHECK(w == "simple maps differ");
}

TEST_CASE("solver outputs are monoidal and satisfy the inverse lemma") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat C(load(name));
    MonFunctor id = identity_functor(C), dd = double_dual_functor(C);
    for (auto* pair : {&id, &dd}) {
      auto sol = solve_nat_tensor(id, *pair);
      CHECK(!sol.empty());
      for (auto& j : sol) {
        CHECK(verify_nat(j).ok);
        CHECK(verify_lemma_mon_nat_inv(j));
        MonNatTrans inv = invert_nat(j);
        CHECK(verify_nat(inv).ok);
        Term t = C.tp(C.tp(C.leaf(C.n() - 1), C.leaf(Obj(std::vector<int>(C.n(), 1)))), C.leaf(C.n() - 1));
        CHECK(verify_nat_word(j, t));
      }
    }
  }
}

TEST_CASE("sign natural transformation on Vec_Z2") {
  Cat C(load("vec_z2"));
  MonFunctor id = identity_functor(C);
  MonNatTrans j{&id, &id, {Scalar(1), Scalar(-1)}};
  CHECK(verify_nat(j).ok);
  CHECK(invert_nat(j).lambda == j.lambda);
  CHECK(verify_lemma_mon_nat_inv(j));
  MonNatTrans bad{&id, &id, {Scalar(1), Scalar(2)}};
  CHECK_FALSE(verify_nat(bad).ok);
}
