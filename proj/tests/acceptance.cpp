// One PASS/FAIL line per acceptance criterion on the bundled categories.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "pivctr/oracle.hpp"

using namespace pivctr;

namespace {

const char* const kAll[] = {"vec_z2", "vec_z3", "vec_s3", "vec_z2_omega", "fibonacci", "ising"};
const char* const kPointed[] = {"vec_z2", "vec_z3", "vec_s3", "vec_z2_omega"};

FusionData load(const std::string& name) {
  return load_fusion_file(std::string(PIVCTR_DATA_DIR) + "/" + name + ".json");
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& s) {
    if (pass) note << "first failure: " << s << "; ";
    pass = false;
  }
  void need(bool ok, const std::string& s) {
    if (!ok) fail(s);
  }
  void need(const ValidationReport& r, const std::string& s) {
    if (!r.ok) fail(s + ": " + r.violations.front());
  }
};

std::vector<Obj> simples(const Cat& C) {
  std::vector<Obj> v;
  for (int i = 0; i < C.n(); ++i) v.push_back(C.simple(i));
  return v;
}

void c1(Outcome& o) {
  for (const char* name : kAll) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = validate_category(load(name));
    double t = since(t0);
    o.need(rep, name);
    o.need(t < 5.0, std::string(name) + " took " + std::to_string(t) + " s");
    o.note << name << " " << rep.checks << " checks; ";
  }
}

void c2(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  int checks = 0;
  for (const char* name : kAll) {
    Cat C(load(name));
    Comonad Z(C);
    for (const Obj& v : simples(C)) {
      auto rep = verify_comonad_laws(Z, v);
      o.need(rep, name);
      checks += rep.checks;
    }
  }
  double t = since(t0);
  o.need(t < 30.0, "took " + std::to_string(t) + " s");
  o.note << checks << " checks in " << t << " s; ";
}

void c3(Outcome& o) {
  int checks = 0;
  for (const char* name : kAll) {
    Cat C(load(name));
    Comonad Z(C);
    std::vector<Comodule> ms;
    for (const Obj& x : simples(C)) ms.push_back(free_comodule(Z, x));
    auto rep = verify_lemma_hopf_ops(Z, simples(C), ms);
    o.need(rep, name);
    checks += rep.checks;
  }
  o.note << checks << " checks; ";
}

void c4(Outcome& o) {
  int n = 0;
  for (const char* name : kAll) {
    Cat C(load(name));
    Comonad Z(C);
    AdjointAlgebra A = adjoint_algebra(Z);
    for (const Obj& x : simples(C)) {
      o.need(sigma_hat_check(Z, A, free_comodule(Z, x)), std::string(name) + " sigma_hat at " + x.key());
      ++n;
    }
    o.need(verify_adjoint_algebra(Z, A), name);
  }
  o.note << n << " free comodules; ";
}

void c5(Outcome& o) {
  const std::pair<const char*, size_t> expect[] = {{"vec_z2", 2}, {"vec_z3", 3},    {"vec_s3", 6},
                                                   {"vec_z2_omega", 2}, {"fibonacci", 1}, {"ising", 2}};
  for (auto [name, count] : expect) {
    Cat C(load(name));
    Comonad Z(C);
    AdjointAlgebra A = adjoint_algebra(Z);
    auto chs = enumerate_characters(Z);
    o.need(chs.size() == count, std::string(name) + " has " + std::to_string(chs.size()) + " characters");
    auto solved = solve_algebra_maps(Z, A);
    o.need(verify_characters(Z, A, &solved), name);
    bool pointed = true;
    try {
      require_pointed(C);
    } catch (const NotPointed&) {
      pointed = false;
    }
    if (pointed) {
      auto maps = alg_maps_pointed(Z);
      bool same = maps.size() == chs.size();
      for (const auto& f : maps) {
        int hits = 0;
        for (const auto& ch : chs) hits += ch.functional == f;
        same = same && hits == 1;
      }
      o.need(same, std::string(name) + " oracle algebra maps differ from the characters");
    }
    o.note << name << " " << chs.size() << "; ";
  }
}

void c6(Outcome& o) {
  for (const char* name : kAll) {
    Cat C(load(name));
    Comonad Z(C);
    AdjointAlgebra A = adjoint_algebra(Z);
    auto endos = solve_algebra_endomorphisms(Z, A, solve_algebra_maps(Z, A));
    o.need(verify_lift_bijection(Z, A, endos), name);
    o.note << name << " " << endos.size() << "; ";
  }
}

void c7(Outcome& o) {
  for (const char* name : kAll) {
    auto t0 = std::chrono::steady_clock::now();
    Cat C(load(name));
    Comonad Z(C);
    MonFunctor id = identity_functor(C), dd = double_dual_functor(C);
    Classification cl = classify(Z, id, dd);
    double t = since(t0);
    o.need(cl.report, name);
    o.need(t < 120.0, std::string(name) + " took " + std::to_string(t) + " s");
    o.note << name << " " << cl.elements.size() << " in " << t << " s; ";
  }
}

void c8(Outcome& o) {
  const std::pair<const char*, long> expect[] = {{"vec_z2", 4}, {"vec_z3", 9}, {"vec_s3", 2}, {"vec_z2_omega", -1}};
  for (auto [name, count] : expect) {
    Cat C(load(name));
    Comonad Z(C);
    MonFunctor id = identity_functor(C), dd = double_dual_functor(C);
    OracleNat orc = pivotal_pointed(Z, dd, center_simples_pointed(C));
    Classification cl = classify(Z, id, dd, {false, false});
    long n = long(orc.structures.size());
    if (count >= 0) o.need(n == count, std::string(name) + " oracle count " + std::to_string(n));
    o.need(long(cl.structures.size()) == n, std::string(name) + " theorem and oracle counts differ");
    o.need(same_structures(cl.structures, orc.structures), std::string(name) + " not pointwise equal");
    o.note << name << " " << n << "; ";
  }
}

void c9(Outcome& o) {
  for (const char* name : kPointed) {
    Cat C(load(name));
    Comonad Z(C);
    MonFunctor id = identity_functor(C);
    InvertibleCenter inv = invertible_center(C, center_simples_pointed(C));
    Classification cl = classify(Z, id, id, {false, false});
    NatGroup g = nat_group(Z, id, cl);
    o.need(g.report, name);
    o.need(inv.members.size() == cl.structures.size(), std::string(name) + " orders differ");
    o.need(groups_isomorphic(inv.table, g.table), std::string(name) + " tables are not isomorphic");
    o.note << name << " " << inv.members.size() << "; ";
  }
}

void c10(Outcome& o) {
  int fcount = 0, hcount = 0;
  std::string fwit, hwit;
  for (const char* name : kAll) {
    FusionData d = load(name);
    Cat C(d);
    int n = d.n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            int paths = 0;
            for (int p = 0; p < n; ++p) paths += d.N[i][j][p] * d.N[p][k][l];
            if (!paths) continue;
            const Mat& F = C.fmatrix(i, j, k, l);
            for (int r = 0; r < F.rows(); ++r)
              for (int c = 0; c < F.cols(); ++c) {
                FusionData bad = d;
                Mat m = F;
                m(r, c) = m(r, c).is_zero() ? Scalar(1) : m(r, c) * Scalar(2);
                bad.F[{i, j, k, l}] = m;
                try {
                  normalize_duality(bad);
                } catch (const Error&) {
                }
                auto rep = validate_category(bad);
                ++fcount;
                std::string where = std::string(name) + " F(" + std::to_string(i) + std::to_string(j) +
                                    std::to_string(k) + std::to_string(l) + ")[" + std::to_string(r) + "," +
                                    std::to_string(c) + "]";
                if (rep.ok) o.fail("F corruption undetected at " + where);
                else if (fwit.empty()) fwit = where + ": " + rep.violations.front();
              }
          }
    Comonad Z(C);
    std::vector<CenterObject> objs;
    for (const Obj& x : simples(C)) objs.push_back(free_center(Z, x));
    if (std::find(std::begin(kPointed), std::end(kPointed), std::string(name)) != std::end(kPointed))
      for (auto& s : center_simples_pointed(C)) objs.push_back(s);
    for (size_t v = 0; v < objs.size(); ++v)
      for (int x = 0; x < n; ++x) {
        const Morphism& h = objs[v].hb[x];
        for (size_t b = 0; b < h.blocks.size(); ++b)
          for (int r = 0; r < h.blocks[b].rows(); ++r)
            for (int c = 0; c < h.blocks[b].cols(); ++c) {
              if (h.blocks[b](r, c).is_zero()) continue;
              CenterObject bad = objs[v];
              bad.hb[x].blocks[b](r, c) *= Scalar(2);
              auto rep = validate_center_object(C, bad);
              ++hcount;
              std::string where = std::string(name) + (v < size_t(n) ? " R(X" + std::to_string(v) : " S(" + std::to_string(v - n)) + ") sigma(X" + std::to_string(x) +
                                  ") block " + std::to_string(b) + " [" + std::to_string(r) + "," +
                                  std::to_string(c) + "]";
              if (rep.ok) o.fail("half-braiding corruption undetected at " + where);
              else if (hwit.empty()) hwit = where + ": " + rep.violations.front();
            }
      }
  }
  o.note << fcount << " F corruptions, " << hcount << " half-braiding corruptions; witnesses: " << fwit << " | "
         << hwit << "; ";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"structural validation", c1},
      {"comonad laws", c2},
      {"Hopf operator identities", c3},
      {"half-braiding of A from the Hopf operators", c4},
      {"algebra map counts and independence", c5},
      {"lift of characters to algebra endomorphisms", c6},
      {"Phi/Psi roundtrips on J(id, (-)**)", c7},
      {"oracle pivotal structures", c8},
      {"Nat(id, id) against invertible center objects", c9},
      {"negative controls", c10},
  };
  int failed = 0, k = 0;
  for (const auto& [desc, fn] : criteria) {
    ++k;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception ") + e.what());
    }
    double t = since(t0);
    std::string note = o.note.str();
    if (note.size() >= 2) note.resize(note.size() - 2);
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << desc << " [" << note << "] ("
              << t << " s)" << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << " (" << 10 - failed << "/10)" << std::endl;
  return failed ? 1 : 0;
}
