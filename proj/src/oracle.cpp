#include "pivctr/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>

#include "pivctr/multsolve.hpp"

namespace pivctr {

Scalar PointedData::w(int a, int b, int c) const {
  auto it = omega.find({a, b, c});
  if (it == omega.end()) return Scalar(1).promote(Field::get(root_order));
  return it->second;
}

int PointedData::inv(int a) const {
  for (int b = 0; b < order; ++b)
    if (table[a][b] == 0) return b;
  throw CocycleViolation("element " + std::to_string(a) + " has no inverse");
}

PointedData load_pointed_json(const nlohmann::json& j) {
  PointedData p;
  try {
    p.order = j.at("order").get<int>();
    p.table = j.at("table").get<std::vector<std::vector<int>>>();
    p.root_order = j.contains("root_order") ? j.at("root_order").get<int>() : 1;
    if (p.order <= 0 || p.root_order <= 0) throw ParseError("order and root_order must be positive");
    if (int(p.table.size()) != p.order) throw ParseError("table must have order rows");
    for (const auto& row : p.table) {
      if (int(row.size()) != p.order) throw ParseError("table must be square");
      for (int x : row)
        if (x < 0 || x >= p.order) throw ParseError("table entry out of range");
    }
    const Field& F = Field::get(p.root_order);
    if (j.contains("omega"))
      for (const auto& e : j.at("omega")) {
        auto abc = e.at("abc").get<std::array<int, 3>>();
        for (int x : abc)
          if (x < 0 || x >= p.order) throw ParseError("omega index out of range");
        p.omega[abc] = scalar_from_json(e.at("value")).promote(F);
      }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  return p;
}

PointedData load_pointed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return load_pointed_json(j);
}

void validate_pointed(const PointedData& p) {
  int n = p.order;
  const auto& t = p.table;
  for (int a = 0; a < n; ++a)
    if (t[0][a] != a || t[a][0] != a) throw CocycleViolation("0 is not the identity of the table");
  for (int a = 0; a < n; ++a) {
    std::set<int> row(t[a].begin(), t[a].end());
    if (int(row.size()) != n) throw CocycleViolation("row " + std::to_string(a) + " is not a permutation");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw CocycleViolation("table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
  for (const auto& [k, v] : p.omega) {
    if (v.is_zero()) throw CocycleViolation("omega vanishes at a triple");
    if ((k[0] == 0 || k[1] == 0 || k[2] == 0) && !v.is_one())
      throw CocycleViolation("omega is not normalized at (" + std::to_string(k[0]) + "," + std::to_string(k[1]) +
                             "," + std::to_string(k[2]) + ")");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Scalar lhs = p.w(b, c, d) * p.w(a, t[b][c], d) * p.w(a, b, c);
          Scalar rhs = p.w(t[a][b], c, d) * p.w(a, b, t[c][d]);
          if (lhs != rhs)
            throw CocycleViolation("cocycle identity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                   "," + std::to_string(c) + "," + std::to_string(d) + "): " + lhs.str() +
                                   " != " + rhs.str());
        }
}

FusionData pointed_category(const PointedData& p) {
  validate_pointed(p);
  int n = p.order;
  nlohmann::ordered_json j;
  j["name"] = "Vec_G";
  j["n"] = n;
  j["unit"] = 0;
  j["root_order"] = p.root_order;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back(a ? std::to_string(a) : "e");
  j["labels"] = labels;
  std::vector<std::vector<std::vector<int>>> N(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) N[a][b][p.table[a][b]] = 1;
  j["N"] = N;
  std::vector<int> dual;
  for (int a = 0; a < n; ++a) dual.push_back(p.inv(a));
  j["dual"] = dual;
  nlohmann::ordered_json F = nlohmann::ordered_json::array();
  for (const auto& [k, v] : p.omega) {
    if (v.is_one()) continue;
    int l = p.table[p.table[k[0]][k[1]]][k[2]];
    F.push_back({{"ijkl", {k[0], k[1], k[2], l}}, {"matrix", {{scalar_to_json(v)}}}});
  }
  j["F"] = F;
  return load_fusion_json(j);
}

PointedData pointed_from_fusion(const FusionData& d) {
  for (int i = 0; i < d.n; ++i)
    if (!is_invertible(d, i)) throw NotPointed(d.label(i) + " is not invertible");
  if (d.unit != 0) throw NotPointed("pointed categories are read with the unit at index 0");
  PointedData p;
  p.order = d.n;
  p.root_order = d.root_order;
  p.table.assign(d.n, std::vector<int>(d.n, -1));
  for (int a = 0; a < d.n; ++a)
    for (int b = 0; b < d.n; ++b)
      for (int c = 0; c < d.n; ++c)
        if (d.N[a][b][c]) p.table[a][b] = c;
  for (const auto& [k, m] : d.F) {
    if (m.rows() != 1 || m.cols() != 1) throw NotPointed("F-matrix of size other than 1");
    if (!m(0, 0).is_one()) p.omega[{k[0], k[1], k[2]}] = m(0, 0);
  }
  return p;
}

int max_group_order() {
  if (const char* s = std::getenv("PIVCTR_MAX_GROUP")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 12;
}

void require_pointed(const Cat& C) {
  pointed_from_fusion(C.data());
  if (C.n() > max_group_order())
    throw GroupTooLarge("|G| = " + std::to_string(C.n()) + " exceeds the cap " + std::to_string(max_group_order()) +
                        " (set PIVCTR_MAX_GROUP)");
}

namespace {

struct Group {
  int n;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<std::vector<std::vector<Scalar>>> alpha;  // (ab)c -> a(bc)

  explicit Group(const Cat& C) : n(C.n()) {
    mul.assign(n, std::vector<int>(n));
    inv.resize(n);
    for (int a = 0; a < n; ++a) {
      inv[a] = C.dual(a);
      for (int b = 0; b < n; ++b) {
        Obj ab = C.tensor(C.simple(a), C.simple(b));
        for (int c = 0; c < n; ++c)
          if (ab.mult[c]) mul[a][b] = c;
      }
    }
    alpha.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          alpha[a][b][c] = C.associator(C.simple(a), C.simple(b), C.simple(c)).blocks[mul[mul[a][b]][c]](0, 0);
  }
  int conj(int g, int k) const { return mul[mul[inv[g]][k]][g]; }  // g^-1 k g
  // T_{xy} = c(k,x,y) T_y T_x on the summand k
  Scalar c(int k, int x, int y) const {
    int k1 = conj(x, k), k2 = conj(y, k1);
    return alpha[x][k1][y] / (alpha[x][y][k2] * alpha[k][x][y]);
  }
  std::vector<int> closure(std::vector<int> gens) const {
    std::set<int> s{0};
    std::vector<int> todo{0};
    while (!todo.empty()) {
      int a = todo.back();
      todo.pop_back();
      for (int g : gens) {
        int b = mul[a][g];
        if (s.insert(b).second) todo.push_back(b);
      }
    }
    return {s.begin(), s.end()};
  }
};

std::vector<std::vector<int>> subgroups(const Group& G, const std::vector<int>& H) {
  std::set<std::vector<int>> seen{{0}};
  std::vector<std::vector<int>> todo{{0}};
  while (!todo.empty()) {
    auto L = todo.back();
    todo.pop_back();
    for (int h : H) {
      if (std::binary_search(L.begin(), L.end(), h)) continue;
      auto gens = L;
      gens.push_back(h);
      auto M = G.closure(gens);
      if (seen.insert(M).second) todo.push_back(M);
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

// lambda(l l') = c(k0, l, l') lambda(l) lambda(l') on L
std::vector<std::map<int, Scalar>> twisted_characters(const Group& G, int k0, const std::vector<int>& L, int N) {
  const Field& F = Field::get(N);
  std::vector<std::map<int, Scalar>> out;
  std::function<void(std::map<int, Scalar>)> go = [&](std::map<int, Scalar> lam) {
    int next = -1;
    for (int l : L)
      if (!lam.count(l)) {
        next = l;
        break;
      }
    if (next < 0) {
      for (int a : L)
        for (int b : L)
          if (lam.at(G.mul[a][b]) != G.c(k0, a, b) * lam.at(a) * lam.at(b)) return;
      out.push_back(std::move(lam));
      return;
    }
    int ord = 1;
    Scalar prod(1);
    for (int p = next; p != 0; p = G.mul[p][next], ++ord) prod *= G.c(k0, p, next);
    std::vector<Scalar> cands;
    try {
      cands = nth_roots(prod.inverse(), ord, N);
    } catch (const RootOutsideField&) {
      return;
    }
    for (const auto& x : cands) {
      auto m = lam;
      m[next] = x;
      bool ok = true, grew = true;
      while (ok && grew) {
        grew = false;
        std::vector<std::pair<int, Scalar>> add;
        for (const auto& [a, va] : m)
          for (const auto& [b, vb] : m) {
            int ab = G.mul[a][b];
            Scalar v = G.c(k0, a, b) * va * vb;
            auto it = m.find(ab);
            if (it != m.end()) {
              if (it->second != v) ok = false;
            } else {
              add.push_back({ab, v});
            }
          }
        for (auto& [k, v] : add)
          if (!m.count(k)) {
            m[k] = v.promote(F);
            grew = true;
          }
      }
      if (ok) go(std::move(m));
    }
  };
  go({{0, Scalar(1).promote(F)}});
  return out;
}

CenterObject monomial_object(const Cat& C, const Group& G, int k0, const std::vector<int>& L,
                             const std::map<int, Scalar>& lam) {
  int n = G.n;
  // right cosets L x, represented by their smallest element
  std::vector<int> coset(n, -1), reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(x);
    for (int l : L) coset[G.mul[l][x]] = id;
  }
  int m = int(reps.size());
  std::vector<int> p(m), copy(m);
  std::vector<int> mult(n, 0);
  for (int a = 0; a < m; ++a) {
    p[a] = G.conj(reps[a], k0);
    copy[a] = mult[p[a]]++;
  }
  CenterObject v;
  v.carrier = Obj(mult);
  for (int g = 0; g < n; ++g) {
    Obj X = C.simple(g);
    Morphism h = C.zero(C.tensor(v.carrier, X), C.tensor(X, v.carrier));
    TensorLayout L1 = C.layout(v.carrier, X), L2 = C.layout(X, v.carrier);
    for (int a = 0; a < m; ++a) {
      int xg = G.mul[reps[a]][g];
      int b = coset[xg];
      int l = G.mul[xg][G.inv[reps[b]]];
      Scalar mu = G.c(k0, l, reps[b]) * lam.at(l) / G.c(k0, reps[a], g);
      int s = G.mul[p[a]][g];
      h.blocks[s](L2.pos(s, g, 0, p[b], copy[b], 0), L1.pos(s, p[a], copy[a], g, 0, 0)) = mu;
    }
    v.hb.push_back(std::move(h));
  }
  return v;
}

}  // namespace

std::vector<CenterObject> center_simples_pointed(const Cat& C) {
  require_pointed(C);
  Group G(C);
  int n = G.n, N = C.data().root_order;
  std::vector<CenterObject> out;
  std::vector<bool> done(n, false);
  long total = 0;
  for (int k0 = 0; k0 < n; ++k0) {
    if (done[k0]) continue;
    std::set<int> K;
    for (int g = 0; g < n; ++g) K.insert(G.conj(g, k0));
    for (int k : K) done[k] = true;
    std::vector<int> H;
    for (int h = 0; h < n; ++h)
      if (G.mul[h][k0] == G.mul[k0][h]) H.push_back(h);
    long target = long(K.size()) * n, got = 0;
    size_t first = out.size();
    for (const auto& L : subgroups(G, H)) {
      if (got == target) break;
      for (const auto& lam : twisted_characters(G, k0, L, N)) {
        if (got == target) break;
        CenterObject v = monomial_object(C, G, k0, L, lam);
        auto rep = validate_center_object(C, v);
        if (!rep.ok) throw IncompleteEnumeration("induced object is not a center object: " + rep.violations.front());
        if (center_hom(C, v, v).size() != 1) continue;
        bool fresh = true;
        for (size_t s = first; s < out.size() && fresh; ++s) fresh = center_hom(C, out[s], v).empty();
        if (!fresh) continue;
        long d = v.carrier.total();
        got += d * d;
        out.push_back(std::move(v));
      }
    }
    total += got;
  }
  if (total != long(n) * n)
    throw IncompleteEnumeration("sum of squared dimensions is " + std::to_string(total) + ", expected " +
                                std::to_string(long(n) * n));
  return out;
}

std::vector<Morphism> alg_maps_pointed(const Comonad& Z) {
  const Cat& C = Z.cat();
  require_pointed(C);
  AdjointAlgebra A = adjoint_algebra(Z);
  const Obj& a = A.carrier.carrier;
  int u = C.unit(), n = a.mult[u];
  if (n > 20) throw GroupTooLarge("too many unit copies in A");
  TensorLayout L = C.layout(a, a);
  const Mat& m = A.mult.blocks[u];
  const Mat& un = A.unit_mor.blocks[u];
  auto rhs = [&](int c, int d) {  // linear form of t_c t_d
    std::vector<Scalar> f(n);
    for (int k = 0; k < n; ++k) f[k] = m(k, L.pos(u, u, c, u, d, 0));
    return f;
  };
  std::vector<Morphism> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> S;
    for (int c = 0; c < n; ++c)
      if (mask >> c & 1) S.push_back(c);
    // a pair inside the support whose form vanishes on the support forces t_c t_d = 0
    bool dead = false;
    for (int c : S)
      for (int d : S) {
        auto f = rhs(c, d);
        bool z = true;
        for (int k : S) z = z && f[k].is_zero();
        dead = dead || z;
      }
    if (dead) continue;
    int r = int(S.size());
    std::vector<std::vector<Scalar>> rows;
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        if ((mask >> c & 1) && (mask >> d & 1)) continue;
        auto f = rhs(c, d);
        std::vector<Scalar> row(r + 1);
        for (int s = 0; s < r; ++s) row[s] = f[S[s]];
        rows.push_back(std::move(row));
      }
    std::vector<Scalar> urow(r + 1);
    for (int s = 0; s < r; ++s) urow[s] = un(S[s], 0);
    urow[r] = Scalar(1);
    rows.push_back(std::move(urow));
    auto piv = rref(rows, r + 1);
    if (!piv.empty() && piv.back() == r) continue;
    if (int(piv.size()) < r)
      throw IncompleteEnumeration("algebra-map equations are underdetermined on a support of size " +
                                  std::to_string(r));
    Morphism f = C.zero(a, C.unit_obj());
    for (int s = 0; s < r; ++s) f.blocks[u](0, S[piv[s]]) = rows[s][r];
    bool support_ok = true;
    for (int c : S) support_ok = support_ok && !f.blocks[u](0, c).is_zero();
    if (!support_ok) continue;
    if (f * A.mult != C.tensor(f, f) || !(f * A.unit_mor).is_identity()) continue;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

struct Decomposition {
  std::vector<std::pair<int, Morphism>> incl;  // (simple index, S -> R)
  std::vector<Morphism> proj;                  // matching R -> S
};

Decomposition decompose(const Cat& C, const CenterObject& R, const std::vector<CenterObject>& simples) {
  Decomposition dec;
  int dim = 0;
  for (size_t s = 0; s < simples.size(); ++s) {
    auto in = center_hom(C, simples[s], R);
    if (in.empty()) continue;
    auto out = center_hom(C, R, simples[s]);
    if (out.size() != in.size()) throw IncompleteEnumeration("hom dimensions disagree in a decomposition");
    int r = int(in.size());
    // Gram(k, l) id_S = out[l] in[k]
    Mat Gr(r, r);
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) {
        Morphism e = out[l] * in[k];
        Scalar g;
        for (const auto& b : e.blocks)
          if (!b.empty()) {
            g = b(0, 0);
            break;
          }
        Gr(k, l) = g;
      }
    Mat A = Gr.transpose().inverse();
    for (int k = 0; k < r; ++k) {
      Morphism p = C.zero(R.carrier, simples[s].carrier);
      for (int l = 0; l < r; ++l) p = p + out[l].scaled(A(k, l));
      dec.incl.push_back({int(s), in[k]});
      dec.proj.push_back(std::move(p));
    }
    dim += r * simples[s].carrier.total();
  }
  if (dim != R.carrier.total()) throw IncompleteEnumeration("object does not decompose into the listed simples");
  Morphism sum = C.zero(R.carrier, R.carrier);
  for (size_t k = 0; k < dec.incl.size(); ++k) sum = sum + dec.incl[k].second * dec.proj[k];
  if (!sum.is_identity()) throw IncompleteEnumeration("decomposition idempotents do not sum to the identity");
  return dec;
}

Scalar ratio(const Morphism& lhs, const Morphism& rhs) {
  for (size_t k = 0; k < rhs.blocks.size(); ++k)
    for (int i = 0; i < rhs.blocks[k].rows(); ++i)
      for (int j = 0; j < rhs.blocks[k].cols(); ++j)
        if (!rhs.blocks[k](i, j).is_zero()) {
          Scalar r = lhs.blocks[k](i, j) / rhs.blocks[k](i, j);
          if (lhs != rhs.scaled(r)) throw InconsistentBlockRatio("maps differ by more than a scalar");
          return r;
        }
  throw ZeroComponent("comparison against a zero map");
}

}  // namespace

OracleNat oracle_nat(const Comonad& Z, const MonFunctor& G, const std::vector<CenterObject>& simples) {
  const Cat& C = Z.cat();
  OracleNat res;
  res.simples = simples;
  int ns = int(simples.size());
  CenterObject one = unit_center(C);
  int us = -1;
  for (int s = 0; s < ns; ++s) {
    auto b = center_hom(C, simples[s], induced_autoeq(G, simples[s]));
    if (b.size() != 1) throw IncompleteEnumeration("Hom(S, G~S) is not one-dimensional");
    res.basis.push_back(b[0]);
    if (center_equal(simples[s], one)) us = s;
  }
  if (us < 0) throw IncompleteEnumeration("the unit is not among the simples");
  std::vector<MultEquation> eqs;
  {
    MultEquation e;
    e.exps.assign(ns, 0);
    e.exps[us] = 1;
    e.rhs = G.F0 / res.basis[us].blocks[C.unit()](0, 0);
    e.witness = "unit";
    eqs.push_back(std::move(e));
  }
  for (int a = 0; a < ns; ++a)
    for (int b = a; b < ns; ++b) {
      const CenterObject &S = simples[a], &T = simples[b];
      CenterObject ST = tensor_center(C, S, T);
      Morphism lhs0 = G.f2(S.carrier, T.carrier) * C.tensor(res.basis[a], res.basis[b]);
      for (int c = 0; c < ns; ++c) {
        bool meets = false;
        for (int k = 0; k < C.n(); ++k) meets = meets || (ST.carrier.mult[k] && simples[c].carrier.mult[k]);
        if (!meets) continue;
        for (const auto& io : center_hom(C, simples[c], ST)) {
          Scalar r = ratio(lhs0 * io, G.on(io) * res.basis[c]);
          MultEquation e;
          e.exps.assign(ns, 0);
          e.exps[a] += 1;
          e.exps[b] += 1;
          e.exps[c] -= 1;
          e.rhs = r.inverse();
          e.witness = "S" + std::to_string(a) + " (x) S" + std::to_string(b) + " > S" + std::to_string(c);
          eqs.push_back(std::move(e));
        }
      }
    }
  MultSolveResult sol = solve_multiplicative(ns, eqs, C.data().root_order);
  if (!sol.consistent) return res;
  res.lambdas = sol.solutions;
  std::vector<Decomposition> decs;
  std::vector<CenterObject> gens;
  for (int i = 0; i < C.n(); ++i) {
    gens.push_back(free_center(Z, C.simple(i)));
    decs.push_back(decompose(C, gens.back(), simples));
  }
  for (const auto& lam : res.lambdas) {
    NatTransOnCenter h;
    h.target = &G;
    h.objects = gens;
    for (int i = 0; i < C.n(); ++i) {
      const Decomposition& d = decs[i];
      Morphism comp = C.zero(gens[i].carrier, G.on(gens[i].carrier));
      for (size_t k = 0; k < d.incl.size(); ++k) {
        int s = d.incl[k].first;
        comp = comp + G.on(d.incl[k].second) * res.basis[s].scaled(lam[s]) * d.proj[k];
      }
      h.components.push_back(std::move(comp));
    }
    res.structures.push_back(std::move(h));
  }
  return res;
}

OracleNat pivotal_pointed(const Comonad& Z, const MonFunctor& dd, const std::vector<CenterObject>& simples) {
  require_pointed(Z.cat());
  return oracle_nat(Z, dd, simples);
}

InvertibleCenter invertible_center(const Cat& C, const std::vector<CenterObject>& simples) {
  InvertibleCenter inv;
  for (size_t s = 0; s < simples.size(); ++s)
    if (simples[s].carrier.total() == 1) inv.members.push_back(int(s));
  int m = int(inv.members.size());
  inv.table.assign(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      CenterObject st = tensor_center(C, simples[inv.members[a]], simples[inv.members[b]]);
      for (int c = 0; c < m; ++c)
        if (!center_hom(C, simples[inv.members[c]], st).empty()) inv.table[a][b] = c;
      if (inv.table[a][b] < 0) throw IncompleteEnumeration("product of invertible simples is not listed");
    }
  return inv;
}

bool same_structures(const std::vector<NatTransOnCenter>& a, const std::vector<NatTransOnCenter>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool hit = false;
    for (size_t k = 0; k < b.size() && !hit; ++k)
      if (!used[k] && extensionally_equal(x, b[k])) used[k] = hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace pivctr
