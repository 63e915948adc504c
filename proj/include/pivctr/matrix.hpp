#pragma once

#include <vector>

#include "pivctr/scalar.hpp"

namespace pivctr {

// Dense row-major matrix over Q(zeta_N).
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat scalar(int n, const Scalar& s);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Scalar& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  Mat operator*(const Mat& b) const;
  Mat operator+(const Mat& b) const;
  Mat operator-(const Mat& b) const;
  Mat& operator+=(const Mat& b);
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;
  bool operator==(const Mat& b) const;
  bool operator!=(const Mat& b) const { return !(*this == b); }

  bool is_zero() const;
  bool is_identity() const;
  int nonzeros() const;

  // Exact Gauss-Jordan; throws NotInvertible.
  Mat inverse() const;
  int rank() const;
  // Columns spanning {x : A x = 0}.
  std::vector<std::vector<Scalar>> nullspace() const;

  Mat kron(const Mat& b) const;
  void set_block(int r0, int c0, const Mat& b);
  Mat block(int r0, int c0, int rows, int cols) const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, int ncols);

}  // namespace pivctr
