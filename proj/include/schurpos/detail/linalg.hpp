#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "schurpos/rational.hpp"

namespace schurpos::detail {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major, rectangular

inline Mat identity(int n) {
  Mat a(n, Vec(n, Rational(0)));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  int m = n ? static_cast<int>(a[0].size()) : 0;
  int p = m ? static_cast<int>(b[0].size()) : 0;
  Mat c(n, Vec(p, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < m; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

/// x^T A for a row vector x.
inline Vec row_times(const Vec& x, const Mat& a) {
  int n = static_cast<int>(a.size());
  int m = n ? static_cast<int>(a[0].size()) : 0;
  Vec out(m, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m; ++j) out[j] += x[i] * a[i][j];
  }
  return out;
}

/// Exact Gauss-Jordan inverse; throws on a singular input.
inline Mat invert(Mat a) {
  int n = static_cast<int>(a.size());
  Mat inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational d = a[col][col];
    for (int j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < n; ++j) { a[r][j] -= f * a[col][j]; inv[r][j] -= f * inv[col][j]; }
    }
  }
  return inv;
}

/// Exact solve of A x = b. Returns nullopt when inconsistent; free variables,
/// if any, are set to zero.
inline std::optional<Vec> solve(Mat a, Vec b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(a[pr], a[r]);
    std::swap(b[pr], b[r]);
    Rational d = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= d;
    b[r] /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  Vec x(cols, Rational(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

/// Basis of the right null space of A.
inline std::vector<Vec> nullspace(Mat a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_of_col(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(a[pr], a[r]);
    Rational d = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(cols, Rational(0));
    v[c] = 1;
    for (int c2 = 0; c2 < cols; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = -a[pivot_of_col[c2]][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace schurpos::detail
