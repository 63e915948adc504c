#include "pivctr/multsolve.hpp"

#include <cstdlib>

namespace pivctr {

namespace {

using IMat = std::vector<std::vector<long>>;

IMat eye(int n) {
  IMat m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_op(IMat& M, int dst, int src, long q) {  // row dst -= q * row src
  for (size_t c = 0; c < M[dst].size(); ++c) M[dst][c] -= q * M[src][c];
}

void col_op(IMat& M, int dst, int src, long q) {  // col dst -= q * col src
  for (auto& row : M) row[dst] -= q * row[src];
}

long floordiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntDiagonal int_diagonalize(IMat A, int ncols) {
  int m = int(A.size()), n = ncols;
  IntDiagonal D;
  D.U = eye(m);
  D.V = eye(n);
  int t = 0;
  while (t < m && t < n) {
    // pivot: smallest nonzero magnitude in the remaining block
    int pr = -1, pc = -1;
    long best = 0;
    for (int r = t; r < m; ++r)
      for (int c = t; c < n; ++c)
        if (A[r][c] && (pr < 0 || std::labs(A[r][c]) < best)) {
          best = std::labs(A[r][c]);
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(A[t], A[pr]);
    std::swap(D.U[t], D.U[pr]);
    for (auto& row : A) std::swap(row[t], row[pc]);
    for (auto& row : D.V) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < m; ++r) {
        if (!A[r][t]) continue;
        long q = floordiv(A[r][t], A[t][t]);
        row_op(A, r, t, q);
        row_op(D.U, r, t, q);
        if (A[r][t]) {
          std::swap(A[t], A[r]);
          std::swap(D.U[t], D.U[r]);
          clean = false;
        }
      }
      for (int c = t + 1; c < n; ++c) {
        if (!A[t][c]) continue;
        long q = floordiv(A[t][c], A[t][t]);
        col_op(A, c, t, q);
        col_op(D.V, c, t, q);
        if (A[t][c]) {
          for (auto& row : A) std::swap(row[t], row[c]);
          for (auto& row : D.V) std::swap(row[t], row[c]);
          clean = false;
        }
      }
    }
    if (A[t][t] < 0) {
      for (auto& x : A[t]) x = -x;
      for (auto& x : D.U[t]) x = -x;
    }
    D.d.push_back(A[t][t]);
    ++t;
  }
  D.rank = t;
  return D;
}

MultSolveResult solve_multiplicative(int nvars, const std::vector<MultEquation>& eqs, int root_order) {
  MultSolveResult res;
  const Field& F = Field::get(root_order);
  for (const auto& e : eqs)
    if (e.rhs.is_zero()) {
      res.consistent = false;
      res.witness = e.witness + " (zero constant)";
      return res;
    }
  IMat A;
  for (const auto& e : eqs) A.push_back(e.exps);
  IntDiagonal D = int_diagonalize(A, nvars);
  int m = int(eqs.size());
  // transformed constants c'_r = prod_s rhs_s^{U[r][s]}
  std::vector<Scalar> cp(m);
  for (int r = 0; r < m; ++r) {
    Scalar c = Scalar(1).promote(F);
    for (int s = 0; s < m; ++s)
      if (D.U[r][s]) c *= eqs[s].rhs.pow(D.U[r][s]);
    cp[r] = c.promote(F);
  }
  for (int r = D.rank; r < m; ++r)
    if (!cp[r].is_one()) {
      res.consistent = false;
      for (int s = 0; s < m; ++s)
        if (D.U[r][s]) {
          res.witness = eqs[s].witness;
          break;
        }
      return res;
    }
  if (D.rank < nvars)
    throw InfiniteSolutionSet("exponent lattice has rank " + std::to_string(D.rank) + " < " +
                              std::to_string(nvars));
  std::vector<std::vector<Scalar>> roots(D.rank);
  for (int r = 0; r < D.rank; ++r) {
    roots[r] = nth_roots(cp[r], int(D.d[r]), root_order);
    if (int(roots[r].size()) != D.d[r])
      throw RootOutsideField("only " + std::to_string(roots[r].size()) + " of the " +
                             std::to_string(D.d[r]) + " roots of " + cp[r].str() + " lie in Q(zeta_" +
                             std::to_string(root_order) + ")");
  }
  std::vector<int> idx(D.rank, 0);
  while (true) {
    std::vector<Scalar> x(nvars);
    for (int v = 0; v < nvars; ++v) {
      Scalar s = Scalar(1).promote(F);
      for (int r = 0; r < D.rank; ++r)
        if (D.V[v][r]) s *= roots[r][idx[r]].pow(D.V[v][r]);
      x[v] = s;
    }
    res.solutions.push_back(std::move(x));
    int r = 0;
    while (r < D.rank && ++idx[r] == int(roots[r].size())) idx[r++] = 0;
    if (r == D.rank) break;
  }
  return res;
}

}  // namespace pivctr
