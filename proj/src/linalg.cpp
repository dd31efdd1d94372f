#include "trop/linalg.hpp"

#include <algorithm>

namespace trop {

std::optional<QVec> solve(QMat a, QVec b) {
  const size_t n = a.size();
  if (n == 0) return QVec{};
  const size_t m = a[0].size();
  std::vector<int> pivot_col(n, -1);
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    Rat inv = 1 / a[row][col];
    for (size_t j = col; j < m; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat factor = a[i][col];
      for (size_t j = col; j < m; ++j) a[i][j] -= factor * a[row][j];
      b[i] -= factor * b[row];
    }
    pivot_col[row] = static_cast<int>(col);
    ++row;
  }
  for (size_t i = row; i < n; ++i) {
    if (b[i] != 0) return std::nullopt;  // inconsistent
  }
  QVec x(m, Rat(0));
  std::vector<bool> solved(m, false);
  for (size_t i = 0; i < row; ++i) {
    x[pivot_col[i]] = b[i];
    solved[pivot_col[i]] = true;
  }
  // Free columns mean the solution is not unique; callers here always pass
  // square nonsingular or consistently pinned systems, so reject instead.
  if (static_cast<size_t>(std::count(solved.begin(), solved.end(), true)) != m) {
    return std::nullopt;
  }
  return x;
}

Int det(IMat m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;  // exact division
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rat det(QMat m) {
  const size_t n = m.size();
  Rat result = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      result = -result;
    }
    result *= m[k][k];
    Rat inv = 1 / m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat factor = m[i][k] * inv;
      for (size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return result;
}

IMat identity_matrix(int n) {
  IMat id(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  const size_t n = a.size();
  const size_t k = b.size();
  const size_t m = k ? b[0].size() : 0;
  IMat out(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t p = 0; p < k; ++p) {
      if (a[i][p] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][p] * b[p][j];
    }
  }
  return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(IMat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  SmithResult r{identity_matrix(rows), std::move(m), identity_matrix(cols)};
  IMat& s = r.s;

  auto row_op = [&](int dst, int src, const Int& f) {  // row dst -= f * row src
    for (int j = 0; j < cols; ++j) s[dst][j] -= f * s[src][j];
    for (int j = 0; j < rows; ++j) r.u[dst][j] -= f * r.u[src][j];
  };
  auto col_op = [&](int dst, int src, const Int& f) {
    for (int i = 0; i < rows; ++i) s[i][dst] -= f * s[i][src];
    for (int i = 0; i < cols; ++i) r.v[i][dst] -= f * r.v[i][src];
  };
  auto swap_rows = [&](int a, int b) {
    std::swap(s[a], s[b]);
    std::swap(r.u[a], r.u[b]);
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(s[i][a], s[i][b]);
    for (int i = 0; i < cols; ++i) std::swap(r.v[i][a], r.v[i][b]);
  };

  const int steps = std::min(rows, cols);
  for (int k = 0; k < steps; ++k) {
    // Smallest-absolute-value nonzero pivot in the trailing block keeps
    // entry growth down.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = k; i < rows; ++i) {
      for (int j = k; j < cols; ++j) {
        if (s[i][j] == 0) continue;
        Int a = abs_int(s[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // trailing block is zero
    swap_rows(k, pi);
    swap_cols(k, pj);

    // Reduce row/column k until the pivot divides everything it meets.
    bool again = true;
    while (again) {
      again = false;
      for (int i = k + 1; i < rows; ++i) {
        if (s[i][k] == 0) continue;
        Int q = floor_div(s[i][k], s[k][k]);
        row_op(i, k, q);
        if (s[i][k] != 0) {
          swap_rows(k, i);
          again = true;
        }
      }
      for (int j = k + 1; j < cols; ++j) {
        if (s[k][j] == 0) continue;
        Int q = floor_div(s[k][j], s[k][k]);
        col_op(j, k, q);
        if (s[k][j] != 0) {
          swap_cols(k, j);
          again = true;
        }
      }
    }

    // Pivot must divide the whole trailing block for the divisibility
    // chain; fold an offending row in and redo this step.
    for (int i = k + 1; i < rows; ++i) {
      bool fold = false;
      for (int j = k + 1; j < cols; ++j) {
        if (s[i][j] % s[k][k] != 0) {
          fold = true;
          break;
        }
      }
      if (fold) {
        row_op(k, i, Int(-1));
        --k;
        break;
      }
    }
  }

  for (int k = 0; k < steps; ++k) {
    if (s[k][k] < 0) {
      for (int j = 0; j < cols; ++j) s[k][j] = -s[k][j];
      for (int j = 0; j < rows; ++j) r.u[k][j] = -r.u[k][j];
    }
  }
  return r;
}

}  // namespace trop
