#include "pivctr/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace pivctr {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

using Poly = std::vector<long>;  // low degree first

Poly poly_div_exact(Poly a, const Poly& b) {
  int da = int(a.size()) - 1, db = int(b.size()) - 1;
  Poly q(da - db + 1, 0);
  for (int i = da; i >= db; --i) {
    long c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

Poly cyclotomic_poly(int N) {
  static std::map<int, Poly> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  Poly p(N + 1, 0);
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d)
    if (N % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
  cache[N] = p;
  return p;
}

std::mutex& field_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Field::Field(int N) : N_(N), phi_(euler_phi(N)) {
  cyclo_ = cyclotomic_poly(N);
  int size = std::max(N, 2 * phi_) + 1;
  pow_.assign(size, std::vector<mpq_class>(phi_, 0));
  pow_[0][0] = 1;
  for (int m = 1; m < size; ++m) {
    const auto& prev = pow_[m - 1];
    auto& cur = pow_[m];
    mpq_class top = prev[phi_ - 1];
    for (int j = phi_ - 1; j >= 1; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < phi_; ++j) cur[j] -= top * cyclo_[j];
  }
}

const Field& Field::get(int N) {
  if (N < 1) throw ParseError("root order must be positive");
  static std::map<int, std::unique_ptr<Field>> fields;
  std::lock_guard<std::mutex> lock(field_mutex());
  auto it = fields.find(N);
  if (it == fields.end())
    it = fields.emplace(N, std::unique_ptr<Field>(new Field(N))).first;
  return *it->second;
}

namespace {
const Field* rationals() {
  static const Field* q = &Field::get(1);
  return q;
}
}  // namespace

Scalar::Scalar() : F_(rationals()) {}

Scalar::Scalar(long v) : F_(rationals()) {
  if (v) c_ = {mpq_class(v)};
}

Scalar::Scalar(const mpq_class& q) : F_(rationals()) {
  if (q != 0) c_ = {q};
}

Scalar::Scalar(const Field& F, std::vector<mpq_class> coeffs)
    : F_(&F), c_(std::move(coeffs)) {
  if (!c_.empty() && int(c_.size()) != F.degree())
    throw ShapeMismatch("coefficient vector length must equal phi(N)");
  normalize();
}

Scalar Scalar::zeta(int N, long k) {
  const Field& F = Field::get(N);
  long e = ((k % N) + N) % N;
  return Scalar(F, F.power(int(e)));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

void Scalar::normalize() {
  for (const auto& x : c_)
    if (x != 0) return;
  c_.clear();
}

std::vector<mpq_class> Scalar::coeffs() const {
  if (c_.empty()) return std::vector<mpq_class>(F_->degree(), 0);
  return c_;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Scalar::rational_value() const {
  return c_.empty() ? mpq_class(0) : c_[0];
}

bool Scalar::is_one() const { return is_rational() && !c_.empty() && c_[0] == 1; }

Scalar Scalar::promote(const Field& G) const {
  if (&G == F_) return *this;
  if (c_.empty()) return Scalar(G, {});
  if (is_rational()) {
    std::vector<mpq_class> v(G.degree(), 0);
    v[0] = c_[0];
    return Scalar(G, std::move(v));
  }
  int M = F_->order(), N = G.order();
  if (N % M != 0)
    throw IncompatibleRootOrders("cannot embed Q(zeta_" + std::to_string(M) +
                                 ") in Q(zeta_" + std::to_string(N) + ")");
  int step = N / M;
  std::vector<mpq_class> v(G.degree(), 0);
  for (int i = 0; i < F_->degree(); ++i) {
    if (c_[i] == 0) continue;
    const auto& p = G.power((i * step) % N);
    for (int j = 0; j < G.degree(); ++j)
      if (p[j] != 0) v[j] += c_[i] * p[j];
  }
  return Scalar(G, std::move(v));
}

namespace {

const Field& common_field(const Scalar& a, const Scalar& b) {
  const Field& A = a.field();
  const Field& B = b.field();
  if (&A == &B) return A;
  if (a.is_rational()) return B;
  if (b.is_rational()) return A;
  if (B.order() % A.order() == 0) return B;
  if (A.order() % B.order() == 0) return A;
  throw IncompatibleRootOrders("root orders " + std::to_string(A.order()) +
                               " and " + std::to_string(B.order()));
}

}  // namespace

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (b.c_.empty()) return *this;
  if (c_.empty()) {
    const Field& G = common_field(*this, b);
    *this = b.promote(G);
    return *this;
  }
  const Field& G = common_field(*this, b);
  if (F_ != &G) *this = promote(G);
  if (b.F_ == &G) {
    for (int j = 0; j < G.degree(); ++j) c_[j] += b.c_[j];
  } else {
    Scalar bb = b.promote(G);
    for (int j = 0; j < G.degree(); ++j) c_[j] += bb.c_[j];
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
  if (c_.empty()) return *this;
  if (b.c_.empty()) {
    const Field& G = common_field(*this, b);
    F_ = &G;
    c_.clear();
    return *this;
  }
  if (b.is_rational() && b.F_->degree() == 1) {
    for (auto& x : c_) x *= b.c_[0];
    return *this;
  }
  if (is_rational() && F_->degree() == 1) {
    mpq_class q = c_[0];
    *this = b;
    for (auto& x : c_) x *= q;
    return *this;
  }
  const Field& G = common_field(*this, b);
  Scalar aa = promote(G), bb = b.promote(G);
  int n = G.degree();
  std::vector<mpq_class> conv(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (aa.c_[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (bb.c_[j] != 0) conv[i + j] += aa.c_[i] * bb.c_[j];
  }
  std::vector<mpq_class> r(conv.begin(), conv.begin() + n);
  for (int m = n; m < 2 * n - 1; ++m) {
    if (conv[m] == 0) continue;
    const auto& p = G.power(m);
    for (int j = 0; j < n; ++j)
      if (p[j] != 0) r[j] += conv[m] * p[j];
  }
  F_ = &G;
  c_ = std::move(r);
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (c_.empty()) throw DivisionByZero("inverse of zero");
  int n = F_->degree();
  if (is_rational()) {
    std::vector<mpq_class> v(n, 0);
    v[0] = 1 / c_[0];
    return Scalar(*F_, std::move(v));
  }
  // Solve (multiplication-by-this matrix) y = e_0 over Q.
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n + 1, 0));
  for (int k = 0; k < n; ++k) {
    Scalar col = *this * Scalar(*F_, F_->power(k));
    auto cv = col.coeffs();
    for (int r = 0; r < n; ++r) M[r][k] = cv[r];
  }
  M[0][n] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw DivisionByZero("singular multiplication matrix");
    std::swap(M[piv], M[col]);
    mpq_class inv = 1 / M[col][col];
    for (int j = col; j <= n; ++j) M[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      mpq_class f = M[r][col];
      for (int j = col; j <= n; ++j) M[r][j] -= f * M[col][j];
    }
  }
  std::vector<mpq_class> v(n);
  for (int r = 0; r < n; ++r) v[r] = M[r][n];
  return Scalar(*F_, std::move(v));
}

Scalar& Scalar::operator/=(const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero scalar");
  return *this *= b.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar(1).promote(*F_), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
  if (a.F_ == b.F_) return a.c_ == b.c_;
  const Field& G = common_field(a, b);
  return a.promote(G).c_ == b.promote(G).c_;
}

std::string Scalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  int N = F_->order();
  for (int i = 0; i < int(c_.size()); ++i) {
    mpq_class q = c_[i];
    if (q == 0) continue;
    bool neg = q < 0;
    mpq_class a = neg ? mpq_class(-q) : q;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "z" << N;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return a;
}

std::vector<Scalar> roots_of_unity(int N, int d) {
  if (d < 1 || N % d != 0)
    throw OrderNotDividing(std::to_string(d) + " does not divide " + std::to_string(N));
  std::vector<Scalar> out;
  for (int k = 0; k < d; ++k) out.push_back(Scalar::zeta(N, long(k) * (N / d)));
  return out;
}

std::vector<Scalar> all_roots_of_unity(int N) {
  std::vector<Scalar> out;
  const Field& F = Field::get(N);
  for (int k = 0; k < N; ++k) out.push_back(Scalar::zeta(N, k));
  if (N % 2) {
    Scalar m1 = Scalar(-1).promote(F);
    for (int k = 0; k < N; ++k) out.push_back(m1 * Scalar::zeta(N, k));
  }
  return out;
}

int root_of_unity_order(const Scalar& s) {
  if (s.is_zero()) return 0;
  int N = s.root_order();
  int M = (N % 2) ? 2 * N : N;
  Scalar p = s;
  for (int k = 1; k <= M; ++k) {
    if (p.is_one()) return k;
    p *= s;
  }
  return 0;
}

namespace {

bool rational_nth_root(const mpq_class& q, int d, mpq_class& out) {
  if (q == 0) return false;
  bool neg = q < 0;
  if (neg && d % 2 == 0) return false;
  mpz_class num = neg ? mpz_class(-q.get_num()) : mpz_class(q.get_num());
  mpz_class den = q.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d)) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d)) return false;
  out = mpq_class(rn, rd);
  if (neg) out = -out;
  return true;
}

}  // namespace

std::vector<Scalar> nth_roots(const Scalar& c, int d, int N) {
  if (c.is_zero()) throw DivisionByZero("root of zero in a multiplicative system");
  const Field& F = Field::get(N);
  Scalar cc = c.promote(F);
  if (d == 1) return {cc};
  std::vector<Scalar> out;
  for (const Scalar& eta : all_roots_of_unity(N)) {
    Scalar t = cc / eta.pow(d);
    if (!t.is_rational()) continue;
    mpq_class r;
    if (!rational_nth_root(t.rational_value(), d, r)) continue;
    Scalar x = Scalar(r).promote(F) * eta;
    bool seen = false;
    for (const auto& y : out) seen = seen || (y == x);
    if (!seen) out.push_back(x);
  }
  if (out.empty())
    throw RootOutsideField("no " + std::to_string(d) + "-th root of " + cc.str() +
                           " in Q(zeta_" + std::to_string(N) + ")");
  return out;
}

namespace {

nlohmann::json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class json_mpz(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ParseError("expected integer in scalar coefficient");
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : s.coeffs())
    coeffs.push_back(nlohmann::json::array({mpz_json(q.get_num()), mpz_json(q.get_den())}));
  return nlohmann::json{{"N", s.root_order()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("coeffs"))
    throw ParseError("scalar must be {\"N\":int,\"coeffs\":[[num,den],...]}");
  int N = j.at("N").get<int>();
  const Field& F = Field::get(N);
  const auto& cs = j.at("coeffs");
  if (!cs.is_array() || int(cs.size()) != F.degree())
    throw ParseError("scalar coefficient count must be phi(" + std::to_string(N) + ")");
  std::vector<mpq_class> v;
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 2) throw ParseError("coefficient must be [num, den]");
    mpz_class num = json_mpz(c[0]), den = json_mpz(c[1]);
    if (den == 0) throw ParseError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    v.push_back(q);
  }
  return Scalar(F, std::move(v));
}

}  // namespace pivctr
