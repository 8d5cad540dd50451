#include "acbm/linalg.hpp"

#include <stdexcept>

namespace acbm {

RationalMatrix identity_matrix(int n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::optional<RationalMatrix> invert(const RationalMatrix& m) {
  const int n = static_cast<int>(m.size());
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

Inertia inertia(RationalMatrix m) {
  const int n = static_cast<int>(m.size());
  Inertia out;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    // prefer a live nonzero diagonal entry
    int p = -1;
    for (int i = 0; i < n; ++i) {
      if (!done[i] && m[i][i] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) {
      // all-zero live diagonal: find an off-diagonal a_ij != 0 and push the
      // congruence e_i -> e_i + e_j to expose 2 a_ij on the diagonal
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (!done[j] && m[i][j] != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi < 0) {
        for (int i = 0; i < n; ++i)
          if (!done[i]) ++out.zero;
        return out;
      }
      for (int c = 0; c < n; ++c) m[bi][c] += m[bj][c];
      for (int r = 0; r < n; ++r) m[r][bi] += m[r][bj];
      p = bi;
    }
    Rational d = m[p][p];
    if (d > 0)
      ++out.positive;
    else
      ++out.negative;
    // eliminate row/column p congruently
    for (int r = 0; r < n; ++r) {
      if (r == p || done[r] || m[r][p] == 0) continue;
      Rational f = m[r][p] / d;
      for (int c = 0; c < n; ++c) m[r][c] -= f * m[p][c];
      for (int c = 0; c < n; ++c) m[c][r] -= f * m[c][p];
    }
    done[p] = true;
  }
  return out;
}

LinearSolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("rhs size mismatch");

  RationalMatrix work = a;
  std::vector<Rational> rhs = b;
  std::vector<int> row_origin(rows);
  for (int r = 0; r < rows; ++r) row_origin[r] = r;

  std::vector<int> pivot_col_of_row;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (work[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(work[pivot], work[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    std::swap(row_origin[pivot], row_origin[rank]);
    Rational p = work[rank][col];
    for (int c = col; c < cols; ++c) work[rank][c] /= p;
    rhs[rank] /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || work[r][col] == 0) continue;
      Rational f = work[r][col];
      for (int c = col; c < cols; ++c) work[r][c] -= f * work[rank][c];
      rhs[r] -= f * rhs[rank];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (rhs[r] != 0) {
      LinearSolveResult res;
      res.status = LinearSolveResult::Status::Inconsistent;
      res.offending_row = row_origin[r];
      return res;
    }
  }
  if (rank < cols) {
    LinearSolveResult res;
    res.status = LinearSolveResult::Status::Underdetermined;
    res.nullity = cols - rank;
    return res;
  }
  LinearSolveResult res;
  res.status = LinearSolveResult::Status::Unique;
  res.solution.assign(cols, Rational(0));
  for (int r = 0; r < rank; ++r) res.solution[pivot_col_of_row[r]] = rhs[r];
  return res;
}

}  // namespace acbm
