#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "pivctr/matrix.hpp"

namespace pivctr {

// Formal direct sum of simples: mult[i] copies of X_i.
struct Obj {
  std::vector<int> mult;

  Obj() = default;
  explicit Obj(std::vector<int> m) : mult(std::move(m)) {}
  int n() const { return int(mult.size()); }
  int total() const;
  bool is_zero() const { return total() == 0; }
  bool operator==(const Obj& o) const { return mult == o.mult; }
  bool operator!=(const Obj& o) const { return mult != o.mult; }
  bool operator<(const Obj& o) const { return mult < o.mult; }
  std::string key() const;
};

// Block-diagonal morphism; blocks[i] is cod.mult[i] x dom.mult[i].
struct Morphism {
  Obj dom, cod;
  std::vector<Mat> blocks;

  bool operator==(const Morphism& o) const;
  bool operator!=(const Morphism& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;
  Morphism scaled(const Scalar& s) const;
};

Morphism operator+(const Morphism& f, const Morphism& g);
Morphism operator-(const Morphism& f, const Morphism& g);
// g after f.
Morphism operator*(const Morphism& g, const Morphism& f);

// Skeletal fusion category. F[{i,j,k,l}] has rows for left paths (p,mu,nu)
// with mu: i j -> p, nu: p k -> l and columns for right paths (q,rho,sig)
// with rho: j k -> q, sig: i q -> l, both in lexicographic order. Absent
// entries are identity matrices.
struct FusionData {
  std::string name;
  std::string examples_version;
  int n = 0;
  int unit = 0;
  int root_order = 1;
  std::vector<std::vector<std::vector<int>>> N;
  std::vector<int> dual;
  std::map<std::array<int, 4>, Mat> F;
  std::vector<std::string> labels;
  // Evaluation/coevaluation normalizations. coev_norm is 1; ev_norm is
  // solved from the first snake identity unless supplied.
  std::vector<Scalar> ev_norm, coev_norm;
  bool norms_from_file = false;

  int Nijk(int i, int j, int k) const { return N[i][j][k]; }
  std::string label(int i) const;
};

FusionData load_fusion_json(const nlohmann::ordered_json& j);
FusionData load_fusion_file(const std::string& path);
nlohmann::ordered_json fusion_to_json(const FusionData& d);
std::string canonical_dump(const FusionData& d);
std::string fingerprint(const FusionData& d);

// Index of (i, copy of a, j, copy of b, mu) inside (a (x) b) at simple k,
// in the canonical lexicographic summand order.
class TensorLayout {
 public:
  TensorLayout(const FusionData& d, const Obj& a, const Obj& b);
  int pos(int k, int i, int ca, int j, int cb, int mu) const {
    return base_[k * n_ + i] + ca * S_[k * n_ + i] + base2_[(k * n_ + i) * n_ + j] +
           (*N_)[i][j][k] * cb + mu;
  }

 private:
  int n_;
  std::vector<int> S_, base_, base2_;
  const std::vector<std::vector<std::vector<int>>>* N_;
};

// Binary tensor word over raw objects, with its flattened raw object cached.
class Term {
 public:
  Term() = default;
  static Term leaf(const Obj& o);
  static Term pair(const Term& l, const Term& r, Obj raw);

  bool is_leaf() const { return node_->leaf; }
  const Obj& raw() const { return node_->raw; }
  Term left() const { return Term(node_->l); }
  Term right() const { return Term(node_->r); }
  bool same(const Term& o) const;
  std::string key() const;

 private:
  struct Node {
    bool leaf = true;
    Obj raw;
    std::shared_ptr<const Node> l, r;
  };
  explicit Term(std::shared_ptr<const Node> p) : node_(std::move(p)) {}
  std::shared_ptr<const Node> node_;
};

// Typed morphism between tensor words.
struct Arrow {
  Term dom, cod;
  Morphism m;
};

struct ValidationReport {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> violations;
  void fail(const std::string& s) {
    ok = false;
    violations.push_back(s);
  }
  void merge(const ValidationReport& o);
};

class Cat {
 public:
  explicit Cat(FusionData d);

  const FusionData& data() const { return d_; }
  int n() const { return d_.n; }
  int unit() const { return d_.unit; }
  int dual(int i) const { return d_.dual[i]; }
  const Field& field() const { return Field::get(d_.root_order); }

  // raw objects
  Obj zero_obj() const { return Obj(std::vector<int>(d_.n, 0)); }
  Obj simple(int i) const;
  Obj unit_obj() const { return simple(d_.unit); }
  Obj tensor(const Obj& a, const Obj& b) const;
  Obj dual(const Obj& a) const;
  Obj sum(const Obj& a, const Obj& b) const;
  // Index of the copy order in a (+) b: copies of a first.
  bool is_unit(const Obj& a) const { return a == unit_obj(); }

  // position of (i, ca, j, cb, mu) inside (a (x) b) at simple k
  int tpos(const Obj& a, const Obj& b, int k, int i, int ca, int j, int cb, int mu) const;
  TensorLayout layout(const Obj& a, const Obj& b) const { return TensorLayout(d_, a, b); }

  // raw morphisms
  Morphism id(const Obj& a) const;
  Morphism zero(const Obj& dom, const Obj& cod) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism associator(const Obj& a, const Obj& b, const Obj& c) const;
  Morphism associator_inv(const Obj& a, const Obj& b, const Obj& c) const;
  Morphism ev(const Obj& a) const;    // a* (x) a -> 1
  Morphism coev(const Obj& a) const;  // 1 -> a (x) a*
  Morphism dual(const Morphism& f) const;  // cod* -> dom*
  Morphism inverse(const Morphism& f) const;
  // inclusion of copy c of X_k into a, and the matching projection
  Morphism incl(const Obj& a, int k, int c) const;
  Morphism proj(const Obj& a, int k, int c) const;
  // summand inclusions/projections for a direct sum a (+) b
  Morphism sum_incl(const Obj& a, const Obj& b, int which) const;
  Morphism sum_proj(const Obj& a, const Obj& b, int which) const;

  const Mat& fmatrix(int i, int j, int k, int l) const;
  const Mat& fmatrix_inv(int i, int j, int k, int l) const;

  // typed layer
  Term leaf(const Obj& o) const { return Term::leaf(o); }
  Term leaf(int i) const { return Term::leaf(simple(i)); }
  Term unit_term() const { return Term::leaf(unit_obj()); }
  Term tp(const Term& l, const Term& r) const { return Term::pair(l, r, tensor(l.raw(), r.raw())); }
  Term dual_term(const Term& t) const { return Term::leaf(dual(t.raw())); }
  std::vector<Obj> leaves(const Term& t) const;

  Arrow id(const Term& t) const;
  Arrow arrow(const Term& dom, const Term& cod, const Morphism& m) const;
  Arrow comp(const Arrow& g, const Arrow& f) const;  // g after f
  Arrow seq(const std::vector<Arrow>& fs) const;     // applied left to right
  Arrow tens(const Arrow& f, const Arrow& g) const;
  Arrow tens(const std::vector<Arrow>& fs) const;  // left nested
  Arrow add(const Arrow& f, const Arrow& g) const;
  Arrow scale(const Arrow& f, const Scalar& s) const;
  Arrow inv(const Arrow& f) const;
  bool equal(const Arrow& f, const Arrow& g) const;
  Arrow rebracket(const Term& from, const Term& to) const;
  // rebracket(dom, f.dom), f, rebracket(f.cod, cod)
  Arrow frame(const Term& dom, const Arrow& f, const Term& cod) const;
  Arrow atomize(const Term& t) const;  // t -> leaf(raw t)
  Arrow expand(const Term& t) const;   // leaf(raw t) -> t
  Arrow retype(const Arrow& f, const Term& dom, const Term& cod) const;
  Arrow ev(const Term& t) const;    // dual_term(t) (x) t -> 1
  Arrow coev(const Term& t) const;  // 1 -> t (x) dual_term(t)
  // (a (x) b)* -> b* (x) a*
  Arrow J(const Term& a, const Term& b) const;
  Arrow dual(const Arrow& f) const;  // leaf(cod*) -> leaf(dom*)
  bool leaves_match(const Term& a, const Term& b) const;

  void set_ev_norm(std::vector<Scalar> e) { d_.ev_norm = std::move(e); }

 private:
  Arrow to_rnf(const Term& t) const;
  Arrow from_rnf(const Term& t) const;
  Arrow split_rnf(const std::vector<Obj>& ls, const std::vector<Obj>& rs) const;
  Term rnf(const std::vector<Obj>& ls, size_t from = 0) const;
  Arrow merge_rnf(const std::vector<Obj>& ls, const std::vector<Obj>& rs) const;

  FusionData d_;
  std::vector<Mat> id_cache_;
  std::map<std::array<int, 4>, std::pair<int, int>> npaths_;
  std::map<std::array<int, 4>, Mat> finv_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Morphism> assoc_cache_, rnf_cache_, unrnf_cache_;
};

// Solves ev_norm from the first snake identity (coev_norm = 1).
void normalize_duality(FusionData& d);

ValidationReport validate_category(const FusionData& d);
// Both snake identities on an arbitrary object.
bool snake_holds(const Cat& C, const Obj& a);

bool is_invertible(const FusionData& d, int i);
std::vector<int> invertibles(const FusionData& d);

std::string mor_str(const Morphism& f);

}  // namespace pivctr
