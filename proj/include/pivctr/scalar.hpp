#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "pivctr/errors.hpp"

namespace pivctr {

// Q(zeta_N) in the power basis modulo the N-th cyclotomic polynomial.
class Field {
 public:
  static const Field& get(int N);

  int order() const { return N_; }
  int degree() const { return phi_; }
  const std::vector<long>& cyclotomic() const { return cyclo_; }
  // x^m reduced, for 0 <= m < table size (at least max(N, 2*phi))
  const std::vector<mpq_class>& power(int m) const { return pow_[m]; }
  int table_size() const { return int(pow_.size()); }

 private:
  explicit Field(int N);
  int N_;
  int phi_;
  std::vector<long> cyclo_;
  std::vector<std::vector<mpq_class>> pow_;
};

class Scalar {
 public:
  Scalar();
  Scalar(long v);
  Scalar(const mpq_class& q);
  Scalar(const Field& F, std::vector<mpq_class> coeffs);

  static Scalar zeta(int N, long k = 1);
  static Scalar rational(long num, long den);

  const Field& field() const { return *F_; }
  int root_order() const { return F_->order(); }
  // Full coefficient vector of length phi(N).
  std::vector<mpq_class> coeffs() const;

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational_value() const;

  Scalar promote(const Field& G) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  Scalar inverse() const;
  Scalar pow(long e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();
  const Field* F_;
  std::vector<mpq_class> c_;  // empty means zero
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

// d-th roots of unity in Q(zeta_N), as zeta_N^(k N/d) for k = 0..d-1.
std::vector<Scalar> roots_of_unity(int N, int d);
// Every root of unity contained in Q(zeta_N).
std::vector<Scalar> all_roots_of_unity(int N);
// All x in Q(zeta_N) with x^d = c, searched among rational multiples of
// roots of unity. Throws RootOutsideField if none is found.
std::vector<Scalar> nth_roots(const Scalar& c, int d, int N);
// Smallest k with s^k == 1, or 0 if s is not a root of unity in its field.
int root_of_unity_order(const Scalar& s);

int euler_phi(int n);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace pivctr
