#include "pivctr/adjalg.hpp"

namespace pivctr {

AdjointAlgebra adjoint_algebra(const Comonad& Z) {
  Obj one = Z.cat().unit_obj();
  return AdjointAlgebra{free_center(Z, one), Z.Z2(one, one), Z.Z0()};
}

ValidationReport verify_adjoint_algebra(const Comonad& Z, const AdjointAlgebra& A) {
  const Cat& C = Z.cat();
  const Obj& a = A.carrier.carrier;
  const Morphism& m = A.mult;
  Morphism ida = C.id(a);
  ValidationReport rep;
  rep.checks += 4;
  if (m * C.tensor(m, ida) != m * C.tensor(ida, m) * C.associator(a, a, a)) rep.fail("m is not associative");
  if (!(m * C.tensor(A.unit_mor, ida)).is_identity()) rep.fail("u is not a left unit");
  if (!(m * C.tensor(ida, A.unit_mor)).is_identity()) rep.fail("u is not a right unit");
  if (m * braiding(C, A.carrier, A.carrier) != m) rep.fail("m o c_{A,A} != m");
  return rep;
}

bool is_algebra_map(const Comonad& Z, const AdjointAlgebra& A, const Morphism& f) {
  const Cat& C = Z.cat();
  if (f.dom != A.carrier.carrier || !C.is_unit(f.cod)) return false;
  return f * A.mult == C.tensor(f, f) && (f * A.unit_mor).is_identity();
}

Character character(const Comonad& Z, int beta) {
  const Cat& C = Z.cat();
  if (beta < 0 || beta >= C.n() || !is_invertible(C.data(), beta))
    throw NotInvertible("character of a non-invertible simple " + std::to_string(beta));
  Obj b = C.simple(beta);
  return Character{C.inverse(C.coev(b)) * Z.pi(C.unit_obj(), b), beta};
}

std::vector<Character> enumerate_characters(const Comonad& Z) {
  std::vector<Character> out;
  for (int b : invertibles(Z.cat().data())) out.push_back(character(Z, b));
  return out;
}

bool linearly_independent(const std::vector<Morphism>& fs) {
  if (fs.empty()) return true;
  int len = 0;
  for (const auto& b : fs[0].blocks) len += b.rows() * b.cols();
  Mat M(int(fs.size()), len);
  for (size_t r = 0; r < fs.size(); ++r) {
    int c = 0;
    for (const auto& b : fs[r].blocks)
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) M(int(r), c++) = b(i, j);
  }
  return M.rank() == int(fs.size());
}

ValidationReport verify_characters(const Comonad& Z, const AdjointAlgebra& A,
                                   const std::vector<Morphism>* solved) {
  const Cat& C = Z.cat();
  ValidationReport rep;
  auto chs = enumerate_characters(Z);
  std::vector<Morphism> fs;
  for (const auto& ch : chs) {
    ++rep.checks;
    if (!is_algebra_map(Z, A, ch.functional))
      rep.fail("ch_" + C.data().label(ch.source_invertible) + " is not an algebra map");
    fs.push_back(ch.functional);
  }
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = i + 1; j < fs.size(); ++j) {
      ++rep.checks;
      if (fs[i] == fs[j])
        rep.fail("ch_" + C.data().label(chs[i].source_invertible) + " = ch_" +
                 C.data().label(chs[j].source_invertible));
    }
  ++rep.checks;
  if (!linearly_independent(fs)) rep.fail("characters are linearly dependent");
  if (solved) {
    ++rep.checks;
    if (solved->size() != fs.size())
      rep.fail(std::to_string(solved->size()) + " solved algebra maps but " + std::to_string(fs.size()) +
               " characters");
    for (size_t s = 0; s < solved->size(); ++s) {
      ++rep.checks;
      int hits = 0;
      for (const auto& f : fs) hits += f == (*solved)[s];
      if (hits != 1) rep.fail("solved algebra map #" + std::to_string(s) + " matches " + std::to_string(hits) + " characters");
    }
  }
  return rep;
}

std::vector<Morphism> solve_algebra_maps(const Comonad& Z, const AdjointAlgebra& A) {
  const Cat& C = Z.cat();
  const Obj& a = A.carrier.carrier;
  int u = C.unit(), n = a.mult[u];
  TensorLayout L = C.layout(a, a);
  const Mat& m = A.mult.blocks[u];
  auto at = [&](int c, int d) { return L.pos(u, u, c, u, d, 0); };
  // f = sum_c t_c e_c. On the copy pair (c, d) the equation reads
  // sum_k t_k m(k, (c,d)) = t_c t_d.
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      if (c != d)
        for (int k = 0; k < n; ++k)
          if (!m(k, at(c, d)).is_zero())
            throw IncompleteEnumeration("multiplication mixes unit copies " + std::to_string(c) + " and " +
                                        std::to_string(d));
  // Mixed pairs force t_c t_d = 0 and unitality forces t != 0: one-hot.
  std::vector<Morphism> out;
  for (int c = 0; c < n; ++c) {
    Scalar t = m(c, at(c, c));
    if (t.is_zero()) continue;
    Morphism f = C.zero(a, C.unit_obj());
    f.blocks[u](0, c) = t;
    if (!(f * A.unit_mor).is_identity()) continue;
    if (f * A.mult != C.tensor(f, f)) continue;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Morphism> solve_algebra_endomorphisms(const Comonad& Z, const AdjointAlgebra& A,
                                                  const std::vector<Morphism>& alg_maps) {
  const Cat& C = Z.cat();
  auto basis = center_hom(C, A.carrier, A.carrier);
  Morphism eps = Z.epsilon(C.unit_obj());
  int u = C.unit(), n = A.carrier.carrier.mult[u];
  int r = int(basis.size());
  std::vector<std::vector<Scalar>> images;
  for (const auto& B : basis) {
    Morphism e = eps * B;
    std::vector<Scalar> row(n);
    for (int c = 0; c < n; ++c) row[c] = e.blocks[u](0, c);
    images.push_back(std::move(row));
  }
  {
    Mat M(r, n);
    for (int k = 0; k < r; ++k)
      for (int c = 0; c < n; ++c) M(k, c) = images[k][c];
    if (M.rank() != r) throw IncompleteEnumeration("eps_1 is not injective on center_hom(A, A)");
  }
  std::vector<Morphism> out;
  for (const auto& f : alg_maps) {
    // solve sum_k t_k images[k] = f as n equations in r unknowns
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(r + 1));
    for (int c = 0; c < n; ++c) {
      for (int k = 0; k < r; ++k) rows[c][k] = images[k][c];
      rows[c][r] = f.blocks[u](0, c);
    }
    auto piv = rref(rows, r + 1);
    if (!piv.empty() && piv.back() == r) continue;
    Morphism T = C.zero(A.carrier.carrier, A.carrier.carrier);
    for (size_t p = 0; p < piv.size(); ++p) T = T + basis[piv[p]].scaled(rows[p][r]);
    if (is_algebra_endomorphism(Z, A, T)) out.push_back(std::move(T));
  }
  return out;
}

Morphism lift_to_center(const Comonad& Z, const Morphism& f) {
  return Z.Zmor(f) * Z.delta(Z.cat().unit_obj());
}

Morphism convolution(const Comonad& Z, const Morphism& f, const Morphism& g) {
  return f * Z.Zmor(g) * Z.delta(Z.cat().unit_obj());
}

bool is_algebra_endomorphism(const Comonad& Z, const AdjointAlgebra& A, const Morphism& T) {
  const Cat& C = Z.cat();
  const Obj& a = A.carrier.carrier;
  if (T.dom != a || T.cod != a) return false;
  if (!is_center_morphism(C, T, A.carrier, A.carrier)) return false;
  return T * A.mult == A.mult * C.tensor(T, T) && T * A.unit_mor == A.unit_mor;
}

ValidationReport verify_lift_bijection(const Comonad& Z, const AdjointAlgebra& A,
                                       const std::vector<Morphism>& endos) {
  const Cat& C = Z.cat();
  ValidationReport rep;
  auto chs = enumerate_characters(Z);
  std::vector<Morphism> lifts;
  for (const auto& ch : chs) {
    std::string tag = "ch_" + C.data().label(ch.source_invertible);
    Morphism T = lift_to_center(Z, ch.functional);
    ++rep.checks;
    if (!is_algebra_endomorphism(Z, A, T)) rep.fail("lift of " + tag + " is not an algebra endomorphism");
    lifts.push_back(std::move(T));
  }
  for (size_t i = 0; i < lifts.size(); ++i)
    for (size_t j = i + 1; j < lifts.size(); ++j) {
      ++rep.checks;
      if (lifts[i] == lifts[j]) rep.fail("lift is not injective");
    }
  ++rep.checks;
  if (endos.size() != lifts.size())
    rep.fail(std::to_string(endos.size()) + " algebra endomorphisms but " + std::to_string(lifts.size()) + " lifts");
  for (size_t e = 0; e < endos.size(); ++e) {
    ++rep.checks;
    int hits = 0;
    for (const auto& T : lifts) hits += T == endos[e];
    if (hits != 1) rep.fail("algebra endomorphism #" + std::to_string(e) + " is hit " + std::to_string(hits) + " times");
  }
  for (const auto& f : chs)
    for (const auto& g : chs) {
      ++rep.checks;
      Morphism lhs = lift_to_center(Z, convolution(Z, f.functional, g.functional));
      if (lhs != lift_to_center(Z, f.functional) * lift_to_center(Z, g.functional))
        rep.fail("(f * g)~ != f~ g~ at (" + C.data().label(f.source_invertible) + "," +
                 C.data().label(g.source_invertible) + ")");
    }
  return rep;
}

int match_character(const Comonad& Z, const Morphism& f) {
  int found = -1, hits = 0;
  for (const auto& ch : enumerate_characters(Z))
    if (ch.functional == f) {
      found = ch.source_invertible;
      ++hits;
    }
  if (hits != 1) throw NoMatch("functional matches " + std::to_string(hits) + " characters");
  return found;
}

Morphism canonical_action(const Comonad& Z, const Obj& v) {
  const Cat& C = Z.cat();
  Term Vt = C.leaf(v);
  Arrow p = Z.pi(C.unit_obj(), Vt);
  Arrow a = C.seq({C.tens(p, C.id(Vt)), C.tens(C.id(Vt), C.ev(Vt))});
  return C.frame(a.dom, a, Vt).m;
}

ValidationReport verify_canonical_action(const Comonad& Z, const AdjointAlgebra& A, const Obj& v) {
  const Cat& C = Z.cat();
  const Obj& a = A.carrier.carrier;
  Morphism rho = canonical_action(Z, v);
  Morphism idv = C.id(v);
  std::string tag = "[" + v.key() + "]";
  ValidationReport rep;
  rep.checks += 3;
  if (rho * C.tensor(A.mult, idv) != rho * C.tensor(C.id(a), rho) * C.associator(a, a, v))
    rep.fail("action is not associative at " + tag);
  if (!(rho * C.tensor(A.unit_mor, idv)).is_identity()) rep.fail("action is not unital at " + tag);
  Morphism alt = C.tensor(idv, Z.epsilon(C.unit_obj())) * half_braiding(C, A.carrier, v);
  if (alt != rho) rep.fail("rho_V != (id (x) eps) o sigma_A(V) at " + tag);
  return rep;
}

Morphism sigma_hat(const Comonad& Z, const Comodule& m) {
  const Cat& C = Z.cat();
  Obj one = C.unit_obj();
  return C.inverse(hopf_right(Z, m, one)) * hopf_left(Z, one, m);
}

bool sigma_hat_check(const Comonad& Z, const AdjointAlgebra& A, const Comodule& m) {
  const Cat& C = Z.cat();
  CenterObject mc = center_from_comodule(Z, m);
  return sigma_hat(Z, m) == C.inverse(half_braiding(C, mc, A.carrier.carrier));
}

}  // namespace pivctr
