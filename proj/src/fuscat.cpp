#include "pivctr/fuscat.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pivctr {

int Obj::total() const {
  int t = 0;
  for (int m : mult) t += m;
  return t;
}

std::string Obj::key() const {
  std::string s;
  for (size_t i = 0; i < mult.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mult[i]);
  }
  return s;
}

bool Morphism::operator==(const Morphism& o) const {
  if (dom != o.dom || cod != o.cod) return false;
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i] != o.blocks[i]) return false;
  return true;
}

bool Morphism::is_zero() const {
  for (const auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool Morphism::is_identity() const {
  if (dom != cod) return false;
  for (const auto& b : blocks)
    if (!b.empty() && !b.is_identity()) return false;
  return true;
}

Morphism Morphism::scaled(const Scalar& s) const {
  Morphism r = *this;
  for (auto& b : r.blocks) b = b.scaled(s);
  return r;
}

Morphism operator+(const Morphism& f, const Morphism& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw ShapeMismatch("morphism sum of different types");
  Morphism r = f;
  for (size_t i = 0; i < r.blocks.size(); ++i) r.blocks[i] += g.blocks[i];
  return r;
}

Morphism operator-(const Morphism& f, const Morphism& g) { return f + g.scaled(Scalar(-1)); }

Morphism operator*(const Morphism& g, const Morphism& f) {
  if (f.cod != g.dom)
    throw ShapeMismatch("composition of [" + f.dom.key() + "]->[" + f.cod.key() + "] with [" +
                        g.dom.key() + "]->[" + g.cod.key() + "]");
  Morphism r;
  r.dom = f.dom;
  r.cod = g.cod;
  r.blocks.resize(f.blocks.size());
  for (size_t i = 0; i < f.blocks.size(); ++i) {
    if (f.dom.mult[i] == 0 || g.cod.mult[i] == 0)
      r.blocks[i] = Mat(g.cod.mult[i], f.dom.mult[i]);
    else
      r.blocks[i] = g.blocks[i] * f.blocks[i];
  }
  return r;
}

std::string FusionData::label(int i) const {
  if (i >= 0 && i < int(labels.size())) return labels[i];
  return std::to_string(i);
}

void ValidationReport::merge(const ValidationReport& o) {
  ok = ok && o.ok;
  checks += o.checks;
  violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

// ---------------------------------------------------------------- Term

Term Term::leaf(const Obj& o) {
  auto n = std::make_shared<Node>();
  n->leaf = true;
  n->raw = o;
  return Term(n);
}

Term Term::pair(const Term& l, const Term& r, Obj raw) {
  auto n = std::make_shared<Node>();
  n->leaf = false;
  n->raw = std::move(raw);
  n->l = l.node_;
  n->r = r.node_;
  return Term(n);
}

bool Term::same(const Term& o) const {
  if (node_ == o.node_) return true;
  if (is_leaf() != o.is_leaf()) return false;
  if (is_leaf()) return raw() == o.raw();
  return left().same(o.left()) && right().same(o.right());
}

std::string Term::key() const {
  if (is_leaf()) return "[" + raw().key() + "]";
  return "(" + left().key() + " " + right().key() + ")";
}

// ---------------------------------------------------------------- layout

TensorLayout::TensorLayout(const FusionData& d, const Obj& a, const Obj& b)
    : n_(d.n), S_(n_ * n_, 0), base_(n_ * n_, 0), base2_(n_ * n_ * n_, 0), N_(&d.N) {
  for (int k = 0; k < n_; ++k) {
    int acc = 0;
    for (int i = 0; i < n_; ++i) {
      int s = 0;
      for (int j = 0; j < n_; ++j) {
        base2_[(k * n_ + i) * n_ + j] = s;
        s += b.mult[j] * d.N[i][j][k];
      }
      S_[k * n_ + i] = s;
      base_[k * n_ + i] = acc;
      acc += a.mult[i] * s;
    }
  }
}

namespace {

using Layout = TensorLayout;

struct Path {
  int mid, a, b;
};

std::vector<Path> left_paths(const FusionData& d, int i, int j, int k, int l) {
  std::vector<Path> out;
  for (int p = 0; p < d.n; ++p)
    for (int mu = 0; mu < d.N[i][j][p]; ++mu)
      for (int nu = 0; nu < d.N[p][k][l]; ++nu) out.push_back({p, mu, nu});
  return out;
}

std::vector<Path> right_paths(const FusionData& d, int i, int j, int k, int l) {
  std::vector<Path> out;
  for (int q = 0; q < d.n; ++q)
    for (int rho = 0; rho < d.N[j][k][q]; ++rho)
      for (int sig = 0; sig < d.N[i][q][l]; ++sig) out.push_back({q, rho, sig});
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Cat

Cat::Cat(FusionData d) : d_(std::move(d)) {
  if (d_.ev_norm.empty()) d_.ev_norm.assign(d_.n, Scalar(1));
  if (d_.coev_norm.empty()) d_.coev_norm.assign(d_.n, Scalar(1));
  int maxp = 1;
  for (int i = 0; i < d_.n; ++i)
    for (int j = 0; j < d_.n; ++j)
      for (int k = 0; k < d_.n; ++k)
        for (int l = 0; l < d_.n; ++l) {
          int nl = int(left_paths(d_, i, j, k, l).size());
          int nr = int(right_paths(d_, i, j, k, l).size());
          if (nl || nr) npaths_[{i, j, k, l}] = {nl, nr};
          maxp = std::max({maxp, nl, nr});
        }
  for (int s = 0; s <= maxp; ++s) id_cache_.push_back(Mat::identity(s));
  for (const auto& [key, m] : d_.F) {
    try {
      finv_[key] = m.inverse();
    } catch (const NotInvertible&) {
    }
  }
}

Obj Cat::simple(int i) const {
  Obj o = zero_obj();
  o.mult[i] = 1;
  return o;
}

Obj Cat::tensor(const Obj& a, const Obj& b) const {
  Obj r = zero_obj();
  for (int i = 0; i < d_.n; ++i) {
    if (!a.mult[i]) continue;
    for (int j = 0; j < d_.n; ++j) {
      if (!b.mult[j]) continue;
      for (int k = 0; k < d_.n; ++k) r.mult[k] += a.mult[i] * b.mult[j] * d_.N[i][j][k];
    }
  }
  return r;
}

Obj Cat::dual(const Obj& a) const {
  Obj r = zero_obj();
  for (int i = 0; i < d_.n; ++i) r.mult[d_.dual[i]] = a.mult[i];
  return r;
}

Obj Cat::sum(const Obj& a, const Obj& b) const {
  Obj r = a;
  for (int i = 0; i < d_.n; ++i) r.mult[i] += b.mult[i];
  return r;
}

int Cat::tpos(const Obj& a, const Obj& b, int k, int i, int ca, int j, int cb, int mu) const {
  return Layout(d_, a, b).pos(k, i, ca, j, cb, mu);
}

Morphism Cat::zero(const Obj& dom, const Obj& cod) const {
  Morphism f;
  f.dom = dom;
  f.cod = cod;
  for (int i = 0; i < d_.n; ++i) f.blocks.emplace_back(cod.mult[i], dom.mult[i]);
  return f;
}

Morphism Cat::id(const Obj& a) const {
  Morphism f;
  f.dom = f.cod = a;
  for (int i = 0; i < d_.n; ++i) f.blocks.push_back(Mat::identity(a.mult[i]));
  return f;
}

namespace {

struct Entry {
  int r, c;
  const Scalar* v;
};

std::vector<Entry> nonzero_entries(const Mat& m) {
  std::vector<Entry> out;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.push_back({r, c, &m(r, c)});
  return out;
}

}  // namespace

Morphism Cat::tensor(const Morphism& f, const Morphism& g) const {
  Obj dom = tensor(f.dom, g.dom), cod = tensor(f.cod, g.cod);
  Morphism r = zero(dom, cod);
  Layout Ld(d_, f.dom, g.dom), Lc(d_, f.cod, g.cod);
  std::vector<std::vector<Entry>> fe(d_.n), ge(d_.n);
  for (int i = 0; i < d_.n; ++i) {
    fe[i] = nonzero_entries(f.blocks[i]);
    ge[i] = nonzero_entries(g.blocks[i]);
  }
  for (int i = 0; i < d_.n; ++i) {
    if (fe[i].empty()) continue;
    for (int j = 0; j < d_.n; ++j) {
      if (ge[j].empty()) continue;
      for (int k = 0; k < d_.n; ++k) {
        int nm = d_.N[i][j][k];
        if (!nm) continue;
        Mat& out = r.blocks[k];
        for (const Entry& x : fe[i])
          for (const Entry& y : ge[j]) {
            Scalar xy = *x.v * *y.v;
            for (int mu = 0; mu < nm; ++mu) out(Lc.pos(k, i, x.r, j, y.r, mu), Ld.pos(k, i, x.c, j, y.c, mu)) = xy;
          }
      }
    }
  }
  return r;
}

const Mat& Cat::fmatrix(int i, int j, int k, int l) const {
  auto it = d_.F.find({i, j, k, l});
  if (it != d_.F.end()) return it->second;
  auto p = npaths_.find({i, j, k, l});
  int s = p == npaths_.end() ? 0 : p->second.first;
  return id_cache_[s];
}

const Mat& Cat::fmatrix_inv(int i, int j, int k, int l) const {
  auto it = d_.F.find({i, j, k, l});
  if (it != d_.F.end()) {
    auto jt = finv_.find({i, j, k, l});
    if (jt == finv_.end())
      throw NotInvertible("F-symbol (" + d_.label(i) + "," + d_.label(j) + "," + d_.label(k) +
                          ";" + d_.label(l) + ") is singular");
    return jt->second;
  }
  return fmatrix(i, j, k, l);
}

namespace {

Morphism build_assoc(const Cat& C, const FusionData& d, const Obj& a, const Obj& b, const Obj& c,
                     bool inverse) {
  Obj ab = C.tensor(a, b), bc = C.tensor(b, c);
  Obj left = C.tensor(ab, c), right = C.tensor(a, bc);
  Morphism r = inverse ? C.zero(right, left) : C.zero(left, right);
  Layout Lab(d, a, b), Lab_c(d, ab, c), Lbc(d, b, c), La_bc(d, a, bc);
  for (int i = 0; i < d.n; ++i) {
    if (!a.mult[i]) continue;
    for (int j = 0; j < d.n; ++j) {
      if (!b.mult[j]) continue;
      for (int k = 0; k < d.n; ++k) {
        if (!c.mult[k]) continue;
        for (int l = 0; l < d.n; ++l) {
          auto lp = left_paths(d, i, j, k, l);
          if (lp.empty()) continue;
          auto rp = right_paths(d, i, j, k, l);
          const Mat& F = inverse ? C.fmatrix_inv(i, j, k, l) : C.fmatrix(i, j, k, l);
          if (F.rows() != (inverse ? int(rp.size()) : int(lp.size())) ||
              F.cols() != (inverse ? int(lp.size()) : int(rp.size())))
            throw ShapeMismatch("F-symbol shape at (" + d.label(i) + "," + d.label(j) + "," +
                                d.label(k) + ";" + d.label(l) + ")");
          Mat& out = r.blocks[l];
          for (int ca = 0; ca < a.mult[i]; ++ca)
            for (int cb = 0; cb < b.mult[j]; ++cb)
              for (int cc = 0; cc < c.mult[k]; ++cc)
                for (size_t x = 0; x < lp.size(); ++x) {
                  int e = Lab.pos(lp[x].mid, i, ca, j, cb, lp[x].a);
                  int L = Lab_c.pos(l, lp[x].mid, e, k, cc, lp[x].b);
                  for (size_t y = 0; y < rp.size(); ++y) {
                    const Scalar& v = inverse ? F(int(y), int(x)) : F(int(x), int(y));
                    if (v.is_zero()) continue;
                    int e2 = Lbc.pos(rp[y].mid, j, cb, k, cc, rp[y].a);
                    int R = La_bc.pos(l, i, ca, rp[y].mid, e2, rp[y].b);
                    if (inverse)
                      out(L, R) = v;
                    else
                      out(R, L) = v;
                  }
                }
        }
      }
    }
  }
  return r;
}

}  // namespace

Morphism Cat::associator(const Obj& a, const Obj& b, const Obj& c) const {
  std::string key = "a" + a.key() + "|" + b.key() + "|" + c.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = assoc_cache_.find(key);
    if (it != assoc_cache_.end()) return it->second;
  }
  Morphism r = build_assoc(*this, d_, a, b, c, false);
  std::lock_guard<std::mutex> lock(mu_);
  return assoc_cache_.emplace(key, std::move(r)).first->second;
}

Morphism Cat::associator_inv(const Obj& a, const Obj& b, const Obj& c) const {
  std::string key = "i" + a.key() + "|" + b.key() + "|" + c.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = assoc_cache_.find(key);
    if (it != assoc_cache_.end()) return it->second;
  }
  Morphism r = build_assoc(*this, d_, a, b, c, true);
  std::lock_guard<std::mutex> lock(mu_);
  return assoc_cache_.emplace(key, std::move(r)).first->second;
}

Morphism Cat::ev(const Obj& a) const {
  Obj ad = dual(a);
  Morphism r = zero(tensor(ad, a), unit_obj());
  Layout L(d_, ad, a);
  int u = d_.unit;
  for (int i = 0; i < d_.n; ++i)
    for (int c = 0; c < a.mult[i]; ++c)
      r.blocks[u](0, L.pos(u, d_.dual[i], c, i, c, 0)) = d_.ev_norm[i];
  return r;
}

Morphism Cat::coev(const Obj& a) const {
  Obj ad = dual(a);
  Morphism r = zero(unit_obj(), tensor(a, ad));
  Layout L(d_, a, ad);
  int u = d_.unit;
  for (int i = 0; i < d_.n; ++i)
    for (int c = 0; c < a.mult[i]; ++c)
      r.blocks[u](L.pos(u, i, c, d_.dual[i], c, 0), 0) = d_.coev_norm[i];
  return r;
}

Morphism Cat::dual(const Morphism& f) const {
  Morphism r = zero(dual(f.cod), dual(f.dom));
  for (int i = 0; i < d_.n; ++i) r.blocks[d_.dual[i]] = f.blocks[i].transpose();
  return r;
}

Morphism Cat::inverse(const Morphism& f) const {
  Morphism r = zero(f.cod, f.dom);
  for (int i = 0; i < d_.n; ++i) {
    if (f.dom.mult[i] != f.cod.mult[i])
      throw NotInvertible("block " + d_.label(i) + " is not square");
    if (f.dom.mult[i]) r.blocks[i] = f.blocks[i].inverse();
  }
  return r;
}

Morphism Cat::incl(const Obj& a, int k, int c) const {
  Morphism r = zero(simple(k), a);
  r.blocks[k](c, 0) = Scalar(1);
  return r;
}

Morphism Cat::proj(const Obj& a, int k, int c) const {
  Morphism r = zero(a, simple(k));
  r.blocks[k](0, c) = Scalar(1);
  return r;
}

Morphism Cat::sum_incl(const Obj& a, const Obj& b, int which) const {
  const Obj& part = which == 0 ? a : b;
  Morphism r = zero(part, sum(a, b));
  for (int k = 0; k < d_.n; ++k) {
    int off = which == 0 ? 0 : a.mult[k];
    for (int c = 0; c < part.mult[k]; ++c) r.blocks[k](off + c, c) = Scalar(1);
  }
  return r;
}

Morphism Cat::sum_proj(const Obj& a, const Obj& b, int which) const {
  const Obj& part = which == 0 ? a : b;
  Morphism r = zero(sum(a, b), part);
  for (int k = 0; k < d_.n; ++k) {
    int off = which == 0 ? 0 : a.mult[k];
    for (int c = 0; c < part.mult[k]; ++c) r.blocks[k](c, off + c) = Scalar(1);
  }
  return r;
}

// ---------------------------------------------------------------- typed layer

std::vector<Obj> Cat::leaves(const Term& t) const {
  std::vector<Obj> out;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term x = stack.back();
    stack.pop_back();
    if (x.is_leaf()) {
      if (!is_unit(x.raw())) out.push_back(x.raw());
    } else {
      stack.push_back(x.right());
      stack.push_back(x.left());
    }
  }
  return out;
}

bool Cat::leaves_match(const Term& a, const Term& b) const { return leaves(a) == leaves(b); }

Arrow Cat::id(const Term& t) const { return Arrow{t, t, id(t.raw())}; }

Arrow Cat::arrow(const Term& dom, const Term& cod, const Morphism& m) const {
  if (m.dom != dom.raw() || m.cod != cod.raw())
    throw ShapeMismatch("arrow type " + dom.key() + " -> " + cod.key() + " does not match [" +
                        m.dom.key() + "] -> [" + m.cod.key() + "]");
  return Arrow{dom, cod, m};
}

Term Cat::rnf(const std::vector<Obj>& ls, size_t from) const {
  if (from >= ls.size()) return unit_term();
  if (from + 1 == ls.size()) return Term::leaf(ls[from]);
  return tp(Term::leaf(ls[from]), rnf(ls, from + 1));
}

Arrow Cat::merge_rnf(const std::vector<Obj>& ls, const std::vector<Obj>& rs) const {
  Term dom = tp(rnf(ls), rnf(rs));
  std::vector<Obj> all = ls;
  all.insert(all.end(), rs.begin(), rs.end());
  Term cod = rnf(all);
  if (ls.size() <= 1 || rs.empty()) return Arrow{dom, cod, id(dom.raw())};
  std::vector<Obj> rest(ls.begin() + 1, ls.end());
  Obj restraw = rnf(rest).raw(), rraw = rnf(rs).raw();
  Morphism a = associator(ls[0], restraw, rraw);
  Morphism m = tensor(id(ls[0]), merge_rnf(rest, rs).m);
  return Arrow{dom, cod, m * a};
}

Arrow Cat::split_rnf(const std::vector<Obj>& ls, const std::vector<Obj>& rs) const {
  Term cod = tp(rnf(ls), rnf(rs));
  std::vector<Obj> all = ls;
  all.insert(all.end(), rs.begin(), rs.end());
  Term dom = rnf(all);
  if (ls.size() <= 1 || rs.empty()) return Arrow{dom, cod, id(dom.raw())};
  std::vector<Obj> rest(ls.begin() + 1, ls.end());
  Obj restraw = rnf(rest).raw(), rraw = rnf(rs).raw();
  Morphism m = tensor(id(ls[0]), split_rnf(rest, rs).m);
  Morphism a = associator_inv(ls[0], restraw, rraw);
  return Arrow{dom, cod, a * m};
}

Arrow Cat::to_rnf(const Term& t) const {
  Term target = rnf(leaves(t));
  if (t.is_leaf()) return Arrow{t, target, id(t.raw())};
  std::string key = t.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rnf_cache_.find(key);
    if (it != rnf_cache_.end()) return Arrow{t, target, it->second};
  }
  Arrow l = to_rnf(t.left()), r = to_rnf(t.right());
  Morphism m = tensor(l.m, r.m);
  Morphism mg = merge_rnf(leaves(t.left()), leaves(t.right())).m;
  Morphism res = mg * m;
  std::lock_guard<std::mutex> lock(mu_);
  rnf_cache_.emplace(key, res);
  return Arrow{t, target, res};
}

Arrow Cat::from_rnf(const Term& t) const {
  Term src = rnf(leaves(t));
  if (t.is_leaf()) return Arrow{src, t, id(t.raw())};
  std::string key = t.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = unrnf_cache_.find(key);
    if (it != unrnf_cache_.end()) return Arrow{src, t, it->second};
  }
  Arrow l = from_rnf(t.left()), r = from_rnf(t.right());
  Morphism sp = split_rnf(leaves(t.left()), leaves(t.right())).m;
  Morphism res = tensor(l.m, r.m) * sp;
  std::lock_guard<std::mutex> lock(mu_);
  unrnf_cache_.emplace(key, res);
  return Arrow{src, t, res};
}

Arrow Cat::rebracket(const Term& from, const Term& to) const {
  if (from.same(to)) return id(from);
  auto lf = leaves(from), lt = leaves(to);
  if (lf != lt) {
    std::string a, b;
    for (auto& o : lf) a += "[" + o.key() + "]";
    for (auto& o : lt) b += "[" + o.key() + "]";
    throw ShapeMismatch("cannot rebracket " + a + " to " + b);
  }
  Arrow f = to_rnf(from), g = from_rnf(to);
  return Arrow{from, to, g.m * f.m};
}

Arrow Cat::frame(const Term& dom, const Arrow& f, const Term& cod) const {
  Arrow r = f;
  if (!dom.same(f.dom)) r = Arrow{dom, f.cod, f.m * rebracket(dom, f.dom).m};
  if (!cod.same(f.cod)) r = Arrow{dom, cod, rebracket(f.cod, cod).m * r.m};
  return r;
}

Arrow Cat::comp(const Arrow& g, const Arrow& f) const {
  if (f.cod.same(g.dom)) return Arrow{f.dom, g.cod, g.m * f.m};
  Arrow r = rebracket(f.cod, g.dom);
  return Arrow{f.dom, g.cod, g.m * (r.m * f.m)};
}

Arrow Cat::seq(const std::vector<Arrow>& fs) const {
  if (fs.empty()) throw ShapeMismatch("empty composite");
  Arrow r = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) r = comp(fs[i], r);
  return r;
}

Arrow Cat::tens(const Arrow& f, const Arrow& g) const {
  return Arrow{tp(f.dom, g.dom), tp(f.cod, g.cod), tensor(f.m, g.m)};
}

Arrow Cat::tens(const std::vector<Arrow>& fs) const {
  Arrow r = fs.at(0);
  for (size_t i = 1; i < fs.size(); ++i) r = tens(r, fs[i]);
  return r;
}

Arrow Cat::add(const Arrow& f, const Arrow& g) const {
  Arrow gg = seq({rebracket(f.dom, g.dom), g, rebracket(g.cod, f.cod)});
  return Arrow{f.dom, f.cod, f.m + gg.m};
}

Arrow Cat::scale(const Arrow& f, const Scalar& s) const { return Arrow{f.dom, f.cod, f.m.scaled(s)}; }

Arrow Cat::inv(const Arrow& f) const { return Arrow{f.cod, f.dom, inverse(f.m)}; }

bool Cat::equal(const Arrow& f, const Arrow& g) const {
  if (!leaves_match(f.dom, g.dom) || !leaves_match(f.cod, g.cod)) return false;
  Arrow gg = seq({rebracket(f.dom, g.dom), g, rebracket(g.cod, f.cod)});
  return gg.m == f.m;
}

Arrow Cat::atomize(const Term& t) const { return Arrow{t, Term::leaf(t.raw()), id(t.raw())}; }

Arrow Cat::expand(const Term& t) const { return Arrow{Term::leaf(t.raw()), t, id(t.raw())}; }

Arrow Cat::retype(const Arrow& f, const Term& dom, const Term& cod) const {
  return arrow(dom, cod, f.m);
}

Arrow Cat::ev(const Term& t) const { return Arrow{tp(dual_term(t), t), unit_term(), ev(t.raw())}; }

Arrow Cat::coev(const Term& t) const {
  return Arrow{unit_term(), tp(t, dual_term(t)), coev(t.raw())};
}

Arrow Cat::J(const Term& a, const Term& b) const {
  Term D = tp(a, b);
  Term Dd = dual_term(D), ad = dual_term(a), bd = dual_term(b);
  Arrow cp = seq({coev(a), tens({id(a), tens(coev(b), id(ad))})});
  Arrow step = seq({tens(id(Dd), cp), tens(ev(D), id(tp(bd, ad)))});
  return seq({rebracket(Dd, tp(Dd, unit_term())), step, rebracket(step.cod, tp(bd, ad))});
}

Arrow Cat::dual(const Arrow& f) const {
  return Arrow{Term::leaf(dual(f.cod.raw())), Term::leaf(dual(f.dom.raw())), dual(f.m)};
}

// ---------------------------------------------------------------- duality

bool snake_holds(const Cat& C, const Obj& a) {
  Term A = C.leaf(a), Ad = C.dual_term(A);
  Arrow s1 = C.seq({C.tens(C.coev(A), C.id(A)), C.tens(C.id(A), C.ev(A))});
  Arrow s2 = C.seq({C.tens(C.id(Ad), C.coev(A)), C.tens(C.ev(A), C.id(Ad))});
  return s1.m.is_identity() && s2.m.is_identity();
}

void normalize_duality(FusionData& d) {
  d.ev_norm.assign(d.n, Scalar(1).promote(Field::get(d.root_order)));
  d.coev_norm.assign(d.n, Scalar(1).promote(Field::get(d.root_order)));
  Cat C(d);
  for (int i = 0; i < d.n; ++i) {
    Term A = C.leaf(i);
    Arrow s1 = C.seq({C.tens(C.coev(A), C.id(A)), C.tens(C.id(A), C.ev(A))});
    const Scalar& v = s1.m.blocks[i](0, 0);
    if (v.is_zero()) throw NotInvertible("snake composite vanishes at " + d.label(i));
    d.ev_norm[i] = v.inverse();
  }
}

bool is_invertible(const FusionData& d, int i) {
  int di = d.dual[i];
  for (int k = 0; k < d.n; ++k)
    if (d.N[i][di][k] != (k == d.unit ? 1 : 0)) return false;
  return true;
}

std::vector<int> invertibles(const FusionData& d) {
  std::vector<int> out;
  for (int i = 0; i < d.n; ++i)
    if (is_invertible(d, i)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- validation

ValidationReport validate_category(const FusionData& d) {
  ValidationReport rep;
  int n = d.n;
  auto L = [&](int i) { return d.label(i); };
  // structure of the fusion rules
  ++rep.checks;
  if (int(d.N.size()) != n || int(d.dual.size()) != n || d.unit < 0 || d.unit >= n) {
    rep.fail("shape: N/dual sizes do not match n");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (int(d.N[i].size()) != n) {
      rep.fail("shape: N[" + L(i) + "] has wrong length");
      return rep;
    }
    for (int j = 0; j < n; ++j)
      if (int(d.N[i][j].size()) != n) {
        rep.fail("shape: N[" + L(i) + "][" + L(j) + "] has wrong length");
        return rep;
      }
  }
  for (int i = 0; i < n; ++i)
    if (d.dual[i] < 0 || d.dual[i] >= n) {
      rep.fail("dual: index out of range at " + L(i));
      return rep;
    }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      ++rep.checks;
      int e = j == k;
      if (d.N[d.unit][j][k] != e || d.N[j][d.unit][k] != e)
        rep.fail("unit: N[1][" + L(j) + "][" + L(k) + "] or N[" + L(j) + "][1][" + L(k) +
                 "] differs from delta");
    }
  ++rep.checks;
  if (d.dual[d.unit] != d.unit) rep.fail("dual: unit is not self-dual");
  for (int i = 0; i < n; ++i) {
    ++rep.checks;
    if (d.dual[d.dual[i]] != i) rep.fail("dual: not an involution at " + L(i));
    for (int j = 0; j < n; ++j) {
      int want = j == d.dual[i];
      if (d.N[i][j][d.unit] != want)
        rep.fail("dual: N[" + L(i) + "][" + L(j) + "][1] = " + std::to_string(d.N[i][j][d.unit]));
      for (int k = 0; k < n; ++k) {
        if (d.N[i][j][k] < 0) rep.fail("negative fusion coefficient");
        if (d.N[i][j][k] != d.N[d.dual[j]][d.dual[i]][d.dual[k]])
          rep.fail("dual: N[" + L(i) + "][" + L(j) + "][" + L(k) + "] != N[" + L(d.dual[j]) +
                   "][" + L(d.dual[i]) + "][" + L(d.dual[k]) + "]");
      }
    }
  }
  if (!rep.ok) return rep;
  // path counts and F shapes
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          int nl = int(left_paths(d, i, j, k, l).size());
          int nr = int(right_paths(d, i, j, k, l).size());
          ++rep.checks;
          if (nl != nr)
            rep.fail("fusion rules not associative at (" + L(i) + "," + L(j) + "," + L(k) + ";" +
                     L(l) + ")");
        }
  for (const auto& [key, m] : d.F) {
    auto [i, j, k, l] = key;
    std::string w = "(" + L(i) + "," + L(j) + "," + L(k) + ";" + L(l) + ")";
    ++rep.checks;
    if (i < 0 || j < 0 || k < 0 || l < 0 || i >= n || j >= n || k >= n || l >= n) {
      rep.fail("F: index out of range");
      continue;
    }
    int nl = int(left_paths(d, i, j, k, l).size());
    int nr = int(right_paths(d, i, j, k, l).size());
    if (nl == 0) {
      rep.fail("F: inadmissible entry " + w);
      continue;
    }
    if (m.rows() != nl || m.cols() != nr) {
      rep.fail("F: shape of " + w + " is " + std::to_string(m.rows()) + "x" +
               std::to_string(m.cols()));
      continue;
    }
    if (m.rank() != nl) rep.fail("F: singular matrix at " + w);
  }
  if (!rep.ok) return rep;

  FusionData dd = d;
  if (!d.norms_from_file || d.ev_norm.empty()) {
    try {
      normalize_duality(dd);
    } catch (const Error& e) {
      rep.fail(std::string("duality: ") + e.what());
      return rep;
    }
  }
  Cat C(dd);
  // pentagon
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Obj a = C.simple(i), b = C.simple(j), c = C.simple(k), e = C.simple(l);
          Obj ab = C.tensor(a, b), bc = C.tensor(b, c), ce = C.tensor(c, e);
          Morphism lhs = C.associator(a, b, ce) * C.associator(ab, c, e);
          Morphism rhs = C.tensor(C.id(a), C.associator(b, c, e)) *
                         C.associator(a, bc, e) * C.tensor(C.associator(a, b, c), C.id(e));
          ++rep.checks;
          if (lhs != rhs) {
            std::string tgt;
            for (int m = 0; m < n; ++m)
              if (lhs.blocks[m] != rhs.blocks[m]) tgt += (tgt.empty() ? "" : ",") + L(m);
            rep.fail("pentagon violated at (" + L(i) + "," + L(j) + "," + L(k) + "," + L(l) +
                     ") in block " + tgt);
          }
        }
  // triangle and unit normalization
  Obj u = C.unit_obj();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Obj a = C.simple(i), b = C.simple(j);
      ++rep.checks;
      if (!C.associator(a, u, b).is_identity())
        rep.fail("triangle violated at (" + L(i) + "," + L(j) + ")");
      ++rep.checks;
      if (!C.associator(u, a, b).is_identity() || !C.associator(a, b, u).is_identity())
        rep.fail("unit constraint: associator with unit slot not identity at (" + L(i) + "," +
                 L(j) + ")");
    }
  // snakes
  for (int i = 0; i < n; ++i) {
    Term A = C.leaf(i), Ad = C.dual_term(A);
    Arrow s1 = C.seq({C.tens(C.coev(A), C.id(A)), C.tens(C.id(A), C.ev(A))});
    Arrow s2 = C.seq({C.tens(C.id(Ad), C.coev(A)), C.tens(C.ev(A), C.id(Ad))});
    rep.checks += 2;
    if (!s1.m.is_identity()) rep.fail("snake 1 violated at " + L(i) + ": " + s1.m.blocks[i](0, 0).str());
    if (!s2.m.is_identity())
      rep.fail("snake 2 violated at " + L(i) + ": " + s2.m.blocks[d.dual[i]](0, 0).str());
  }
  return rep;
}

// ---------------------------------------------------------------- I/O

namespace {

Scalar load_scalar(const nlohmann::ordered_json& j, const Field& F) {
  nlohmann::json jj = nlohmann::json::parse(j.dump());
  Scalar s = scalar_from_json(jj);
  return s.promote(F);
}

}  // namespace

FusionData load_fusion_json(const nlohmann::ordered_json& j) {
  FusionData d;
  try {
    if (j.contains("name")) d.name = j.at("name").get<std::string>();
    if (j.contains("examples_version")) d.examples_version = j.at("examples_version").get<std::string>();
    d.n = j.at("n").get<int>();
    d.unit = j.at("unit").get<int>();
    d.root_order = j.at("root_order").get<int>();
    if (d.n <= 0 || d.root_order <= 0) throw ParseError("n and root_order must be positive");
    d.N = j.at("N").get<std::vector<std::vector<std::vector<int>>>>();
    d.dual = j.at("dual").get<std::vector<int>>();
    if (j.contains("labels")) d.labels = j.at("labels").get<std::vector<std::string>>();
    const Field& F = Field::get(d.root_order);
    for (const auto& e : j.at("F")) {
      auto idx = e.at("ijkl").get<std::vector<int>>();
      if (idx.size() != 4) throw ParseError("ijkl must have 4 entries");
      const auto& rows = e.at("matrix");
      int r = int(rows.size());
      int c = r ? int(rows[0].size()) : 0;
      Mat m(r, c);
      for (int a = 0; a < r; ++a) {
        if (int(rows[a].size()) != c) throw ParseError("ragged F matrix");
        for (int b = 0; b < c; ++b) m(a, b) = load_scalar(rows[a][b], F);
      }
      std::array<int, 4> key{idx[0], idx[1], idx[2], idx[3]};
      if (d.F.count(key)) throw ParseError("duplicate F entry");
      d.F[key] = m;
    }
    if (j.contains("ev_norm")) {
      d.norms_from_file = true;
      for (const auto& s : j.at("ev_norm")) d.ev_norm.push_back(load_scalar(s, F));
      for (const auto& s : j.at("coev_norm")) d.coev_norm.push_back(load_scalar(s, F));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  // shapes are checked before duality is normalized
  bool shapes_ok = int(d.N.size()) == d.n && int(d.dual.size()) == d.n;
  for (const auto& row : d.N) {
    shapes_ok = shapes_ok && int(row.size()) == d.n;
    for (const auto& col : row) shapes_ok = shapes_ok && int(col.size()) == d.n;
  }
  if (!shapes_ok) throw ParseError("fusion coefficient array does not have shape n x n x n");
  for (int x : d.dual)
    if (x < 0 || x >= d.n) throw ParseError("dual index out of range");
  if (d.unit < 0 || d.unit >= d.n) throw ParseError("unit index out of range");
  for (const auto& [k, m] : d.F)
    for (int x : k)
      if (x < 0 || x >= d.n) throw ParseError("F index out of range");
  if (!d.norms_from_file) {
    try {
      normalize_duality(d);
    } catch (const Error&) {
      // left unnormalized; validate_category reports the failure
      d.ev_norm.assign(d.n, Scalar(1));
      d.coev_norm.assign(d.n, Scalar(1));
    }
  }
  return d;
}

FusionData load_fusion_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return load_fusion_json(j);
}

nlohmann::ordered_json fusion_to_json(const FusionData& d) {
  nlohmann::ordered_json j;
  if (!d.name.empty()) j["name"] = d.name;
  j["examples_version"] = d.examples_version;
  j["n"] = d.n;
  j["unit"] = d.unit;
  j["root_order"] = d.root_order;
  if (!d.labels.empty()) j["labels"] = d.labels;
  j["N"] = d.N;
  j["dual"] = d.dual;
  nlohmann::ordered_json F = nlohmann::ordered_json::array();
  for (const auto& [key, m] : d.F) {
    nlohmann::ordered_json e;
    e["ijkl"] = {key[0], key[1], key[2], key[3]};
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int a = 0; a < m.rows(); ++a) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int b = 0; b < m.cols(); ++b)
        row.push_back(nlohmann::ordered_json::parse(scalar_to_json(m(a, b).promote(Field::get(d.root_order))).dump()));
      rows.push_back(row);
    }
    e["matrix"] = rows;
    F.push_back(e);
  }
  j["F"] = F;
  if (d.norms_from_file) {
    nlohmann::ordered_json ev = nlohmann::ordered_json::array(), co = nlohmann::ordered_json::array();
    for (const auto& s : d.ev_norm) ev.push_back(nlohmann::ordered_json::parse(scalar_to_json(s).dump()));
    for (const auto& s : d.coev_norm) co.push_back(nlohmann::ordered_json::parse(scalar_to_json(s).dump()));
    j["ev_norm"] = ev;
    j["coev_norm"] = co;
  }
  return j;
}

std::string canonical_dump(const FusionData& d) {
  nlohmann::ordered_json j = fusion_to_json(d);
  std::string out = "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + nlohmann::ordered_json(it.key()).dump() + ": ";
    if (it.value().is_array() && (it.key() == "F" || it.key() == "N") && !it.value().empty()) {
      out += "[\n";
      for (size_t k = 0; k < it.value().size(); ++k) {
        out += "    " + it.value()[k].dump();
        out += k + 1 < it.value().size() ? ",\n" : "\n";
      }
      out += "  ]";
    } else {
      out += it.value().dump();
    }
  }
  out += "\n}\n";
  return out;
}

std::string fingerprint(const FusionData& d) {
  std::string s = canonical_dump(d);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string mor_str(const Morphism& f) {
  std::ostringstream os;
  for (size_t i = 0; i < f.blocks.size(); ++i) {
    const Mat& b = f.blocks[i];
    if (b.empty()) continue;
    os << "[" << i << "]";
    for (int r = 0; r < b.rows(); ++r) {
      os << (r ? "; " : " ");
      for (int c = 0; c < b.cols(); ++c) os << (c ? ", " : "") << b(r, c).str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace pivctr
