#include <random>

#include "doctest.h"
#include "pivctr/scalar.hpp"

using namespace pivctr;

TEST_CASE("rational and cyclotomic arithmetic") {
  CHECK(scalar_arith(Scalar::rational(1, 2), Scalar::rational(1, 2), ArithOp::add) == Scalar(1));
  CHECK(scalar_arith(Scalar::zeta(4), Scalar::zeta(4), ArithOp::mul) == Scalar(-1));
  Scalar x = Scalar::zeta(5) + Scalar::zeta(5, 4);
  CHECK(x * x + x - Scalar(1) == Scalar(0));
  CHECK((x + Scalar(1)) * x == Scalar(1));
  CHECK(Scalar::zeta(8).pow(8) == Scalar(1));
  CHECK(Scalar::zeta(8).pow(4) == Scalar(-1));
  CHECK(Scalar::zeta(6, 2) == Scalar::zeta(3));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zeta(4) + Scalar::zeta(3), IncompatibleRootOrders);
  CHECK_THROWS_AS(roots_of_unity(4, 3), OrderNotDividing);
  CHECK_THROWS_AS(nth_roots(Scalar(2), 2, 4), RootOutsideField);
}

TEST_CASE("promotion") {
  Scalar a = Scalar::zeta(4) + Scalar::rational(1, 3);
  Scalar b = a.promote(Field::get(12));
  CHECK(b.root_order() == 12);
  CHECK(b * b == (a * a).promote(Field::get(12)));
  CHECK(a + Scalar::zeta(12) == b + Scalar::zeta(12));
  CHECK(Scalar::zeta(4) * Scalar::zeta(8) == Scalar::zeta(8, 3));
}

TEST_CASE("roots of unity") {
  auto r = roots_of_unity(4, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Scalar(1));
  CHECK(r[1] == Scalar(-1));
  auto r8 = roots_of_unity(8, 4);
  REQUIRE(r8.size() == 4);
  CHECK(r8[1] == Scalar::zeta(8, 2));
  CHECK(r8[2] == Scalar(-1));
  CHECK(r8[3] == Scalar::zeta(8, 6));
  auto r5 = roots_of_unity(5, 1);
  REQUIRE(r5.size() == 1);
  CHECK(r5[0] == Scalar(1));
  CHECK(all_roots_of_unity(5).size() == 10);
  CHECK(root_of_unity_order(Scalar::zeta(12, 4)) == 3);
  CHECK(root_of_unity_order(Scalar(2)) == 0);
  auto sq = nth_roots(Scalar(-4), 2, 4);
  CHECK(sq.size() == 2);
  for (auto& s : sq) CHECK(s * s == Scalar(-4));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int N : {1, 3, 5, 8, 12}) {
    const Field& F = Field::get(N);
    auto rnd = [&] {
      std::vector<mpq_class> c;
      for (int i = 0; i < F.degree(); ++i) c.emplace_back(num(rng), den(rng));
      for (auto& q : c) q.canonicalize();
      return Scalar(F, c);
    };
    for (int t = 0; t < 20; ++t) {
      Scalar a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
  }
}

TEST_CASE("json round trip") {
  Scalar a = Scalar::zeta(8, 3) * Scalar::rational(-7, 2) + Scalar::rational(1, 3);
  CHECK(scalar_from_json(scalar_to_json(a)) == a);
  nlohmann::json bad = {{"N", 4}, {"coeffs", {{1, 1}}}};
  CHECK_THROWS_AS(scalar_from_json(bad), ParseError);
}
