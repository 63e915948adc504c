#include <algorithm>

#include "common.hpp"
#include "doctest.h"
#include "pivctr/oracle.hpp"

using namespace pivctr;
using testing_support::data_path;
using testing_support::load;

namespace {

// D_n as r^a s^b -> a + n b
PointedData dihedral(int n) {
  PointedData p;
  p.order = 2 * n;
  p.root_order = 2 * n;
  p.table.assign(p.order, std::vector<int>(p.order));
  for (int x = 0; x < p.order; ++x)
    for (int y = 0; y < p.order; ++y) {
      int a = x % n, b = x / n, c = y % n, d = y / n;
      int e = b ? (a - c + n) % n : (a + c) % n;
      p.table[x][y] = e + n * ((b + d) % 2);
    }
  return p;
}

std::vector<long> dims(const std::vector<CenterObject>& s) {
  std::vector<long> d;
  for (const auto& v : s) d.push_back(v.carrier.total());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("pointed categories from group files") {
  Cat z2(pointed_category(load_pointed_file(data_path("groups/z2.json"))));
  CHECK(validate_category(z2.data()).ok);
  FusionData om = pointed_category(load_pointed_file(data_path("groups/z2_omega.json")));
  CHECK(validate_category(om).ok);
  CHECK(om.F.at({1, 1, 1, 1})(0, 0) == Scalar(-1).promote(Field::get(4)));
  FusionData s3 = pointed_category(load_pointed_file(data_path("groups/s3.json")));
  CHECK(validate_category(s3).ok);
  CHECK(s3.N == load("vec_s3").N);
  CHECK_THROWS_AS(pointed_category(load_pointed_file(data_path("groups/z2_bad_cocycle.json"))), CocycleViolation);

  PointedData back = pointed_from_fusion(load("vec_z2_omega"));
  CHECK(back.order == 2);
  CHECK(back.w(1, 1, 1) == Scalar(-1).promote(Field::get(4)));
  CHECK_THROWS_AS(pointed_from_fusion(load("fibonacci")), NotPointed);
  CHECK_THROWS_AS(require_pointed(Cat(load("ising"))), NotPointed);
}

TEST_CASE("center simples of pointed categories") {
  Cat z2(load("vec_z2"));
  auto s = center_simples_pointed(z2);
  CHECK(s.size() == 4);
  CHECK(dims(s) == std::vector<long>{1, 1, 1, 1});
  for (const auto& v : s) CHECK(validate_center_object(z2, v).ok);

  Cat om(load("vec_z2_omega"));
  auto so = center_simples_pointed(om);
  CHECK(so.size() == 4);
  // the twist forces a fourth root of unity into the half-braiding at (g, g)
  bool twisted = false;
  for (const auto& v : so)
    if (v.carrier.mult[1]) twisted = twisted || !v.hb[1].blocks[0](0, 0).is_rational();
  CHECK(twisted);

  Cat s3(load("vec_s3"));
  auto ss = center_simples_pointed(s3);
  CHECK(ss.size() == 8);
  CHECK(dims(ss) == std::vector<long>{1, 1, 2, 2, 2, 2, 3, 3});

  Cat d4(pointed_category(dihedral(4)));
  auto sd = center_simples_pointed(d4);
  CHECK(sd.size() == 22);
  long sum = 0;
  for (long d : dims(sd)) sum += d * d;
  CHECK(sum == 64);
}

TEST_CASE("group cap") {
  Cat d4(pointed_category(dihedral(4)));
  setenv("PIVCTR_MAX_GROUP", "6", 1);
  CHECK_THROWS_AS(center_simples_pointed(d4), GroupTooLarge);
  unsetenv("PIVCTR_MAX_GROUP");
  CHECK(max_group_order() == 12);
}

TEST_CASE("algebra maps on pointed categories") {
  for (const char* name : {"vec_z2", "vec_z3", "vec_s3", "vec_z2_omega"}) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    auto maps = alg_maps_pointed(Z);
    std::vector<Morphism> chs;
    for (const auto& ch : enumerate_characters(Z)) chs.push_back(ch.functional);
    CHECK(maps.size() == chs.size());
    for (const auto& f : maps) CHECK(std::count(chs.begin(), chs.end(), f) == 1);
  }
  Cat F(load("fibonacci"));
  Comonad ZF(F);
  CHECK_THROWS_AS(alg_maps_pointed(ZF), NotPointed);
}

TEST_CASE("oracle pivotal structures match the classification") {
  const std::pair<const char*, size_t> expect[] = {{"vec_z2", 4}, {"vec_z3", 9}, {"vec_s3", 2}, {"vec_z2_omega", 4}};
  for (auto [name, count] : expect) {
    CAPTURE(name);
    Cat C(load(name));
    Comonad Z(C);
    MonFunctor id = identity_functor(C), dd = double_dual_functor(C);
    auto simples = center_simples_pointed(C);
    OracleNat piv = pivotal_pointed(Z, dd, simples);
    CHECK(piv.structures.size() == count);
    Classification cl = classify(Z, id, dd, {false, false});
    CHECK(same_structures(piv.structures, cl.structures));

    InvertibleCenter inv = invertible_center(C, simples);
    Classification aut = classify(Z, id, id, {false, false});
    NatGroup g = nat_group(Z, id, aut);
    CHECK(g.report.ok);
    CHECK(inv.members.size() == aut.structures.size());
    CHECK(groups_isomorphic(inv.table, g.table));
  }
}
