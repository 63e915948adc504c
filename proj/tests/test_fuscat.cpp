#include <fstream>
#include <random>
#include <sstream>

#include "common.hpp"
#include "doctest.h"

using namespace pivctr;
using testing_support::load;

namespace {

Morphism random_mor(const Cat& C, const Obj& a, const Obj& b, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Morphism f = C.zero(a, b);
  for (auto& blk : f.blocks)
    for (int r = 0; r < blk.rows(); ++r)
      for (int c = 0; c < blk.cols(); ++c) blk(r, c) = Scalar(d(rng));
  return f;
}

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bundled categories validate") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    auto rep = validate_category(load(name));
    for (auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.ok);
  }
}

TEST_CASE("corrupted F-symbol is reported with a pentagon witness") {
  auto rep = validate_category(load_fusion_file(testing_support::data_path("corrupt_vec_z2.json")));
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (auto& v : rep.violations) found = found || v.find("pentagon violated at (g,g,g,g)") != std::string::npos;
  CHECK(found);
}

TEST_CASE("tensor of objects") {
  Cat z2(load("vec_z2")), fib(load("fibonacci"));
  CHECK(z2.tensor(z2.simple(1), z2.simple(1)) == z2.unit_obj());
  CHECK(fib.tensor(fib.simple(1), fib.simple(1)).mult == std::vector<int>{1, 1});
  CHECK(fib.tensor(fib.unit_obj(), fib.simple(1)) == fib.simple(1));
}

TEST_CASE("tensor of morphisms") {
  Cat z2(load("vec_z2"));
  Morphism f = z2.id(z2.simple(1)).scaled(Scalar(2)), g = z2.id(z2.simple(1)).scaled(Scalar(3));
  CHECK(z2.tensor(f, g) == z2.id(z2.unit_obj()).scaled(Scalar(6)));
  Cat fib(load("fibonacci"));
  Scalar l = Scalar::zeta(5), m = Scalar(7);
  Morphism t = fib.tensor(fib.id(fib.simple(1)).scaled(l), fib.id(fib.simple(1)).scaled(m));
  CHECK(t == fib.id(Obj({1, 1})).scaled(l * m));
}

TEST_CASE("interchange law and associator naturality") {
  std::mt19937 rng(11);
  for (const char* name : {"vec_s3", "fibonacci", "ising"}) {
    CAPTURE(name);
    Cat C(load(name));
    int n = C.n();
    Obj a = C.zero_obj(), b = C.zero_obj(), c = C.zero_obj();
    for (int i = 0; i < n; ++i) {
      a.mult[i] = (i + 1) % 2;
      b.mult[i] = 1;
      c.mult[i] = i % 2 + (i == 0);
    }
    Morphism f1 = random_mor(C, a, b, rng), f2 = random_mor(C, b, c, rng);
    Morphism g1 = random_mor(C, c, a, rng), g2 = random_mor(C, a, b, rng);
    CHECK(C.tensor(f2 * f1, g2 * g1) == C.tensor(f2, g2) * C.tensor(f1, g1));
    Morphism h = random_mor(C, b, c, rng);
    Morphism lhs = C.associator(b, a, c) * C.tensor(C.tensor(f1, g1), h);
    Morphism rhs = C.tensor(f1, C.tensor(g1, h)) * C.associator(a, c, b);
    CHECK(lhs == rhs);
    CHECK(C.associator_inv(a, b, c) * C.associator(a, b, c) == C.id(C.tensor(C.tensor(a, b), c)));
  }
}

TEST_CASE("associator with a unit slot and twisted sign") {
  Cat C(load("vec_z2_omega"));
  Obj g = C.simple(1), u = C.unit_obj();
  CHECK(C.associator(u, g, g).is_identity());
  CHECK(C.associator(g, u, g).is_identity());
  CHECK(C.associator(g, g, g) == C.id(g).scaled(Scalar(-1)));
  Cat fib(load("fibonacci"));
  Obj t = fib.simple(1);
  Morphism a = fib.associator(t, t, t);
  CHECK(a.blocks[1].rows() == 2);
}

TEST_CASE("snakes on composite objects and duals") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    Cat C(load(name));
    Obj x = C.zero_obj();
    for (int i = 0; i < C.n(); ++i) x.mult[i] = 1 + (i % 2);
    CHECK(snake_holds(C, x));
    CHECK(C.ev(C.unit_obj()).is_identity());
  }
  Cat s3(load("vec_s3"));
  CHECK(s3.dual(s3.simple(4)) == s3.simple(5));
  CHECK(s3.dual(s3.simple(1)) == s3.simple(1));
}

TEST_CASE("duality coherence J") {
  Cat C(load("vec_z2_omega"));
  Term g = C.leaf(1);
  Arrow j = C.J(g, g);
  CHECK(j.m == C.id(C.unit_obj()).scaled(Scalar(-1)));
  Cat u(load("vec_z2"));
  Arrow ju = u.J(u.unit_term(), u.unit_term());
  CHECK(ju.m.is_identity());
  Cat fib(load("fibonacci"));
  Term t = fib.leaf(1);
  Arrow jt = fib.J(t, t);
  CHECK_NOTHROW(fib.inv(jt));
}

TEST_CASE("dual morphisms are contravariant") {
  std::mt19937 rng(5);
  Cat C(load("ising"));
  Obj a({1, 1, 0}), b({0, 2, 1}), c({1, 1, 1});
  Morphism f = random_mor(C, a, b, rng), g = random_mor(C, b, c, rng);
  CHECK(C.dual(g * f) == C.dual(f) * C.dual(g));
  CHECK(C.dual(C.id(a)) == C.id(C.dual(a)));
  Morphism l = C.id(C.simple(1)).scaled(Scalar(5));
  CHECK(C.dual(l) == C.id(C.simple(1)).scaled(Scalar(5)));
}

TEST_CASE("ev normalization on Fibonacci") {
  FusionData d = load("fibonacci");
  Cat C(d);
  Scalar prod = d.ev_norm[1] * d.coev_norm[1];
  CHECK(prod * C.fmatrix(1, 1, 1, 1)(0, 0) == Scalar(1));
}

TEST_CASE("typed layer rebrackets automatically") {
  Cat C(load("vec_z2_omega"));
  Term g = C.leaf(1);
  Term l = C.tp(C.tp(g, g), g), r = C.tp(g, C.tp(g, g));
  Arrow rb = C.rebracket(l, r);
  CHECK(rb.m == C.associator(C.simple(1), C.simple(1), C.simple(1)));
  Arrow back = C.comp(C.id(l), rb);
  CHECK(back.m.is_identity());
  CHECK_THROWS_AS(C.rebracket(g, C.tp(g, g)), ShapeMismatch);
}

TEST_CASE("invertible objects") {
  CHECK(invertibles(load("vec_s3")).size() == 6);
  CHECK(invertibles(load("fibonacci")) == std::vector<int>{0});
  CHECK(invertibles(load("ising")) == std::vector<int>{0, 2});
}

TEST_CASE("file round trip is bit exact") {
  for (const char* name : testing_support::kBundled) {
    CAPTURE(name);
    std::string path = testing_support::data_path(std::string(name) + ".json");
    FusionData d = load_fusion_file(path);
    CHECK(canonical_dump(d) == slurp(path));
    CHECK(fingerprint(d) == fingerprint(load_fusion_json(nlohmann::ordered_json::parse(canonical_dump(d)))));
  }
  CHECK_THROWS_AS(load_fusion_json(nlohmann::ordered_json::parse("{\"n\":2}")), ParseError);
}
