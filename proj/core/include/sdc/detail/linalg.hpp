#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "sdc/errors.hpp"
#include "sdc/types.hpp"

namespace sdc::detail {

// Solves A x = b by LU with partial pivoting (in place).  Systems here are
// small dense Newton matrices, at most (M*d)^2 with M*d around 20.
inline Vec lu_solve(Mat a, Vec b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a[col][col]);
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > best) {
        best = std::abs(a[r][col]);
        piv = r;
      }
    }
    if (best < 1e-250) throw SingularMatrixError("singular Newton matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    const double inv = 1.0 / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[r][col] * inv;
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  Vec x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

}  // namespace sdc::detail
