#include "pivctr/matrix.hpp"

namespace pivctr {

Mat Mat::identity(int n) { return scalar(n, Scalar(1)); }

Mat Mat::scalar(int n, const Scalar& s) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Mat Mat::operator*(const Mat& b) const {
  if (c_ != b.r_) throw ShapeMismatch("matrix product " + std::to_string(r_) + "x" +
                                      std::to_string(c_) + " * " + std::to_string(b.r_) +
                                      "x" + std::to_string(b.c_));
  if (b.is_identity()) return *this;
  if (is_identity()) return b;
  Mat out(r_, b.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

Mat& Mat::operator+=(const Mat& b) {
  if (r_ != b.r_ || c_ != b.c_) throw ShapeMismatch("matrix sum");
  for (size_t i = 0; i < a_.size(); ++i)
    if (!b.a_[i].is_zero()) a_[i] += b.a_[i];
  return *this;
}

Mat Mat::operator+(const Mat& b) const {
  Mat out = *this;
  out += b;
  return out;
}

Mat Mat::operator-(const Mat& b) const { return *this + b.scaled(Scalar(-1)); }

Mat Mat::scaled(const Scalar& s) const {
  Mat out(r_, c_);
  if (s.is_zero()) return out;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].is_zero()) out.a_[i] = a_[i] * s;
  return out;
}

Mat Mat::transpose() const {
  Mat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Mat::operator==(const Mat& b) const {
  if (r_ != b.r_ || c_ != b.c_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != b.a_[i]) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

int Mat::nonzeros() const {
  int n = 0;
  for (const auto& x : a_) n += !x.is_zero();
  return n;
}

std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, int ncols) {
  std::vector<int> piv;
  int r = 0;
  int nr = int(rows.size());
  for (int col = 0; col < ncols && r < nr; ++col) {
    int p = r;
    while (p < nr && rows[p][col].is_zero()) ++p;
    if (p == nr) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = rows[r][col].inverse();
    for (int j = col; j < int(rows[r].size()); ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col];
      for (int j = col; j < int(rows[i].size()); ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(col);
    ++r;
  }
  return piv;
}

Mat Mat::inverse() const {
  if (r_ != c_) throw NotInvertible("non-square matrix");
  int n = r_;
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = (*this)(i, j);
    rows[i][n + i] = Scalar(1);
  }
  auto piv = rref(rows, n);
  if (int(piv.size()) != n) throw NotInvertible("singular matrix");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = rows[i][n + j];
  return out;
}

int Mat::rank() const {
  std::vector<std::vector<Scalar>> rows(r_, std::vector<Scalar>(c_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) rows[i][j] = (*this)(i, j);
  return int(rref(rows, c_).size());
}

std::vector<std::vector<Scalar>> Mat::nullspace() const {
  std::vector<std::vector<Scalar>> rows(r_, std::vector<Scalar>(c_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) rows[i][j] = (*this)(i, j);
  auto piv = rref(rows, c_);
  std::vector<bool> is_piv(c_, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < c_; ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> v(c_);
    v[f] = Scalar(1);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat Mat::kron(const Mat& b) const {
  Mat out(r_ * b.r_, c_ * b.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.r_; ++k)
        for (int l = 0; l < b.c_; ++l)
          if (!b(k, l).is_zero()) out(i * b.r_ + k, j * b.c_ + l) = x * b(k, l);
    }
  return out;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  for (int i = 0; i < b.r_; ++i)
    for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::block(int r0, int c0, int rows, int cols) const {
  Mat out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

}  // namespace pivctr
