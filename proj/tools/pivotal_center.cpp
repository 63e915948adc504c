#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pivctr/oracle.hpp"
#include "pivctr/parallel.hpp"

using namespace pivctr;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  std::string command, path;
  FusionData d;
  std::ostringstream text;
  json checks = json::array();
  json results = json::object();
  bool ok = true;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    ok = ok && pass;
    text << "  " << (pass ? "pass" : "FAIL") << "  " << name;
    if (!detail.empty()) text << ": " << detail;
    text << "\n";
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  }
  void check(const std::string& name, const ValidationReport& r) {
    std::string detail = std::to_string(r.checks) + " checks";
    if (!r.ok) detail += ", " + std::to_string(r.violations.size()) + " violations; first: " + r.violations.front();
    check(name, r.ok, detail);
  }
};

FusionData load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (j.contains("table")) return pointed_category(load_pointed_json(nlohmann::json::parse(j.dump())));
  return load_fusion_json(j);
}

std::string labels(const FusionData& d, const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + d.label(x);
  return s;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json structure_json(const Cat& C, const JElement& b, const NatTransOnCenter& h) {
  json comps = json::object();
  for (size_t i = 0; i < h.components.size(); ++i) {
    json blocks = json::object();
    const Morphism& f = h.components[i];
    for (size_t k = 0; k < f.blocks.size(); ++k)
      if (!f.blocks[k].empty()) blocks[C.data().label(int(k))] = mat_json(f.blocks[k]);
    comps[std::to_string(i)] = blocks;
  }
  json j = json::object();
  for (size_t i = 0; i < b.j.lambda.size(); ++i) j[std::to_string(i)] = b.j.lambda[i].str();
  return {{"beta", b.beta}, {"j", j}, {"components", comps}};
}

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

std::string plural(size_t n, const std::string& one, const std::string& many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

bool require_valid(Run& run) {
  auto rep = validate_category(run.d);
  run.check("category axioms (pentagon, triangle, snakes)", rep);
  if (!rep.ok) {
    for (size_t k = 0; k < rep.violations.size() && k < 5; ++k) run.text << "    witness: " << rep.violations[k] << "\n";
    json w = json::array();
    for (const auto& v : rep.violations) w.push_back(v);
    run.results["witnesses"] = w;
  }
  return rep.ok;
}

MonFunctor target_functor(const Cat& C, const std::string& name) {
  return name == "identity" ? identity_functor(C) : double_dual_functor(C);
}

void cmd_validate(Run& run, int jobs) {
  if (!require_valid(run)) return;
  Cat C(run.d);
  Comonad Z(C);
  int n = C.n();
  std::vector<ValidationReport> real(n), laws(n);
  parallel_for(n, jobs, [&](int i) {
    real[i] = verify_realization(Z, C.simple(i));
    laws[i] = verify_comonad_laws(Z, C.simple(i));
  });
  ValidationReport r, l;
  for (int i = 0; i < n; ++i) {
    r.merge(real[i]);
    l.merge(laws[i]);
  }
  run.check("end realizations", r);
  run.check("comonad laws", l);
  std::vector<Obj> xs;
  std::vector<Comodule> ms;
  for (int i = 0; i < n; ++i) {
    xs.push_back(C.simple(i));
    ms.push_back(free_comodule(Z, C.simple(i)));
  }
  run.check("Hopf operators", verify_lemma_hopf_ops(Z, xs, ms));
  MonFunctor dd = double_dual_functor(C);
  run.check("double dual functor", validate_functor(dd));
  run.check("duality transformation", verify_duality_monoidal(dd));
}

void cmd_classify(Run& run, const std::string& functor, int jobs) {
  if (!require_valid(run)) {
    run.text << "  category fails validation; not classifying\n";
    return;
  }
  Cat C(run.d);
  Comonad Z(C);
  MonFunctor id = identity_functor(C), G = target_functor(C, functor);
  auto inv = invertibles(run.d);
  run.text << "|Inv(C)| = " << inv.size() << ": " << labels(run.d, inv) << "\n";
  run.results["invertibles"] = inv;

  Classification cl = classify(Z, id, G, {true, true, jobs});
  json per_beta = json::object();
  run.text << "J(id, " << G.name << "): " << plural(cl.elements.size(), "element", "elements") << "\n";
  for (int b : inv) {
    size_t k = 0;
    for (const auto& e : cl.elements) k += e.beta == b;
    run.text << "  beta = " << run.d.label(b) << ": " << k << "\n";
    per_beta[run.d.label(b)] = k;
  }
  run.results["J"] = per_beta;
  json list = json::array();
  for (size_t k = 0; k < cl.elements.size(); ++k) {
    run.text << "[" << k << "] " << cl.elements[k].str() << "\n";
    for (size_t i = 0; i < cl.structures[k].components.size(); ++i)
      run.text << "    on R(" << run.d.label(int(i)) << "): " << one_line(mor_str(cl.structures[k].components[i]))
               << "\n";
    list.push_back(structure_json(C, cl.elements[k], cl.structures[k]));
  }
  run.results["structures"] = list;
  size_t m = cl.structures.size();
  if (functor == "identity") {
    run.text << plural(m, "monoidal automorphism", "monoidal automorphisms") << " of id_Z(C)\n";
    NatGroup g = nat_group(Z, id, cl);
    run.check("composition matches the product of J-elements", g.report);
    run.text << "Inv(Z(C)) ≅ group of order " << m << "\n";
    run.results["inv_center_order"] = m;
    try {
      require_pointed(C);
      InvertibleCenter ic = invertible_center(C, center_simples_pointed(C));
      run.check("oracle count of invertible center objects", ic.members.size() == m,
                "oracle " + std::to_string(ic.members.size()) + ", theorem " + std::to_string(m));
      run.check("group tables isomorphic", groups_isomorphic(ic.table, g.table));
    } catch (const NotPointed&) {
    }
  } else {
    run.text << plural(m, "pivotal structure", "pivotal structures") << " of Z(C)\n";
    std::string w;
    size_t onc = solve_nat_tensor(id, G, &w).size();
    run.text << "pivotal structures of C: " << onc << "\n";
    run.results["pivotal_structures_of_C"] = onc;
  }
  run.results["count"] = m;
  run.check("Phi outputs verified, distinct, roundtrips", cl.report);
}

void cmd_oracle(Run& run) {
  pointed_from_fusion(run.d);
  if (!require_valid(run)) return;
  Cat C(run.d);
  require_pointed(C);
  Comonad Z(C);
  MonFunctor id = identity_functor(C), dd = double_dual_functor(C);
  auto simples = center_simples_pointed(C);
  std::vector<long> dims;
  for (const auto& s : simples) dims.push_back(s.carrier.total());
  std::ostringstream ds;
  for (long d : dims) ds << " " << d;
  run.text << "center simples: " << simples.size() << ", dims" << ds.str() << "\n";
  run.results["center_simples"] = simples.size();
  run.results["dims"] = dims;

  auto maps = alg_maps_pointed(Z);
  auto chs = enumerate_characters(Z);
  bool same = maps.size() == chs.size();
  for (const auto& f : maps) {
    int hits = 0;
    for (const auto& ch : chs) hits += ch.functional == f;
    same = same && hits == 1;
  }
  run.text << "algebra maps A -> 1      theorem: " << chs.size() << ", oracle: " << maps.size()
           << ", equal as sets: " << (same ? "yes" : "no") << "\n";
  run.check("characters exhaust the algebra maps", same);

  Classification piv = classify(Z, id, dd, {true, false});
  OracleNat op = pivotal_pointed(Z, dd, simples);
  bool pw = same_structures(piv.structures, op.structures);
  run.text << "pivotal structures       theorem: " << piv.structures.size() << ", oracle: " << op.structures.size()
           << ", pointwise equal: " << (pw ? "yes" : "no") << "\n";
  run.check("pivotal structures agree pointwise", pw);
  run.check("theorem-side verification", piv.report);

  Classification aut = classify(Z, id, id, {false, false});
  NatGroup g = nat_group(Z, id, aut);
  InvertibleCenter ic = invertible_center(C, simples);
  bool iso = ic.members.size() == aut.structures.size() && groups_isomorphic(ic.table, g.table);
  run.text << "Nat(id, id) vs Inv(Z(C)) theorem: " << aut.structures.size() << ", oracle: " << ic.members.size()
           << ", isomorphic: " << (iso ? "yes" : "no") << "\n";
  run.check("Nat(id, id) is isomorphic to Inv(Z(C))", iso);
  run.check("Nat(id, id) composition", g.report);
  run.results["pivotal"] = {{"theorem", piv.structures.size()}, {"oracle", op.structures.size()}, {"pointwise_equal", pw}};
  run.results["invertible_center"] = {{"theorem", aut.structures.size()}, {"oracle", ic.members.size()}, {"isomorphic", iso}};
}

void cmd_natsolve(Run& run, const std::string& functor) {
  if (!require_valid(run)) return;
  Cat C(run.d);
  MonFunctor id = identity_functor(C), G = target_functor(C, functor);
  std::string w;
  auto sols = solve_nat_tensor(id, G, &w);
  run.text << "Nat_x(id, " << G.name << "): " << sols.size() << " transformations\n";
  if (!w.empty()) run.text << "  witness: " << w << "\n";
  json list = json::array();
  ValidationReport r;
  for (const auto& t : sols) {
    json lam = json::array();
    run.text << "  [";
    for (size_t i = 0; i < t.lambda.size(); ++i) {
      run.text << (i ? ", " : "") << t.lambda[i].str();
      lam.push_back(t.lambda[i].str());
    }
    run.text << "]\n";
    list.push_back(lam);
    r.merge(verify_nat(t));
  }
  run.results["solutions"] = list;
  run.check("solutions are monoidal", r);
}

bool input_error(const Error& e) {
  static const char* kinds[] = {"ParseError", "CocycleViolation", "NotPointed", "GroupTooLarge",
                                "IncompatibleRootOrders", "OrderNotDividing"};
  for (const char* k : kinds)
    if (e.kind() == k) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pivotal structures of Drinfeld centers of skeletal fusion categories"};
  app.require_subcommand(1);
  std::string path, functor = "double-dual";
  bool as_json = false;
  int jobs = 1;
  auto add = [&](const std::string& name, const std::string& desc, bool with_functor) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file", path, "category JSON or group JSON")->required();
    if (with_functor)
      sub->add_option("--functor", functor, "target functor")->check(CLI::IsMember({"double-dual", "identity"}));
    sub->add_flag("--json", as_json, "emit a JSON report");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    return sub;
  };
  add("validate", "category axioms, comonad laws and Hopf operators", false);
  add("classify", "enumerate J(id, G) and verify Phi and Psi", true);
  add("oracle", "brute-force cross-check on pointed categories", false);
  add("natsolve", "monoidal natural transformations id -> G on C", true);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Run run;
  run.command = app.get_subcommands().front()->get_name();
  run.path = path;
  auto t0 = std::chrono::steady_clock::now();
  try {
    run.d = load_input(path);
    run.text << run.command << " " << path << "\n";
    run.text << "category: " << run.d.name << " (fingerprint " << fingerprint(run.d) << ")\n";
    if (run.command == "validate") cmd_validate(run, jobs);
    else if (run.command == "classify") cmd_classify(run, functor, jobs);
    else if (run.command == "oracle") cmd_oracle(run);
    else cmd_natsolve(run, functor);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (input_error(e)) return 2;
    run.check("run completed", false, e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (as_json) {
    json out = {{"command", run.command},
                {"file", run.path},
                {"category", run.d.name},
                {"fingerprint", fingerprint(run.d)}};
    if (run.command == "classify" || run.command == "natsolve") out["functor"] = functor;
    out["results"] = run.results;
    out["checks"] = run.checks;
    out["pass"] = run.ok;
    out["wall_time_s"] = secs;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << run.text.str();
    std::cout << (run.ok ? "result: pass" : "result: FAIL") << " (" << secs << " s)\n";
  }
  return run.ok ? 0 : 1;
}
