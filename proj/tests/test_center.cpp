#include "common.hpp"
#include "doctest.h"
#include "pivctr/center.hpp"

using namespace pivctr;
using testing_support::load;

namespace {

CenterObject z2_obj(const Cat& C, int g, const Scalar& s) {
  CenterObject v;
  v.carrier = C.simple(g);
  v.hb = {C.id(C.simple(g)), C.id(C.simple(g ^ 1)).scaled(s)};
  return v;
}

}  // namespace

TEST_CASE("unit center object") {
  Cat C(load("ising"));
  CenterObject u = unit_center(C);
  CHECK(validate_center_object(C, u).ok);
  CHECK(center_hom(C, u, u).size() == 1);
  CHECK(half_braiding(C, u, Obj({2, 1, 1})).is_identity());
}

TEST_CASE("Vec_Z2 center objects") {
  Cat C(load("vec_z2"));
  CenterObject plus = z2_obj(C, 1, Scalar(1)), minus = z2_obj(C, 1, Scalar(-1));
  CHECK(validate_center_object(C, minus).ok);
  auto bad = validate_center_object(C, z2_obj(C, 1, Scalar(2)));
  CHECK_FALSE(bad.ok);
  bool witness = false;
  for (auto& v : bad.violations) witness = witness || v == "multiplicativity fails at (g,g)";
  CHECK(witness);
  CHECK(center_hom(C, plus, minus).empty());
  CHECK(center_hom(C, minus, minus).size() == 1);
  CenterObject sq = tensor_center(C, minus, minus);
  CHECK(sq.carrier == C.unit_obj());
  CHECK(center_equal(sq, unit_center(C)));
  CHECK(braiding(C, minus, minus) == C.id(C.unit_obj()).scaled(Scalar(-1)));
  CenterObject e_minus = z2_obj(C, 0, Scalar(-1));
  CHECK(validate_center_object(C, e_minus).ok);
  CHECK(braiding(C, minus, e_minus).is_identity());
  CHECK(braiding(C, e_minus, minus) == C.id(C.simple(1)).scaled(Scalar(-1)));
}

TEST_CASE("half-braiding extension on sums") {
  Cat C(load("vec_s3"));
  CenterObject u = unit_center(C);
  Obj w({0, 1, 1, 0, 0, 0});
  CHECK(half_braiding(C, u, w).is_identity());
  CHECK(half_braiding(C, u, C.simple(3)).is_identity());
}

TEST_CASE("induced autoequivalence") {
  Cat C(load("vec_z2"));
  CenterObject minus = z2_obj(C, 1, Scalar(-1));
  CHECK(center_equal(induced_autoeq(identity_functor(C), minus), minus));
  MonFunctor dd = double_dual_functor(C);
  CHECK(center_equal(induced_autoeq(dd, minus), minus));
  Cat W(load("vec_z2_omega"));
  // (g, +-i) are the center objects over g when omega(g,g,g) = -1
  CenterObject gi;
  gi.carrier = W.simple(1);
  gi.hb = {W.id(W.simple(1)), W.id(W.simple(0)).scaled(Scalar::zeta(4))};
  auto girep = validate_center_object(W, gi);
  for (auto& v : girep.violations) MESSAGE(v);
  CHECK(girep.ok);
  CenterObject img = induced_autoeq(conj_functor(W, 1), gi);
  CHECK(validate_center_object(W, img).ok);
  MonFunctor I = conj_functor(W, 1), dd2 = double_dual_functor(W);
  MonFunctor comp = compose_functors(I, dd2);
  CHECK(center_equal(induced_autoeq(comp, gi), induced_autoeq(I, induced_autoeq(dd2, gi))));
}
