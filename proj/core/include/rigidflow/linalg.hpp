#ifndef RIGIDFLOW_LINALG_HPP
#define RIGIDFLOW_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace rigidflow {

// Row-major flat indexing for the small dense tensors used throughout.
inline std::size_t ix2(std::size_t n, std::size_t a, std::size_t b) { return a * n + b; }
inline std::size_t ix3(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  return (a * n + b) * n + c;
}
inline std::size_t ix4(std::size_t n, std::size_t a, std::size_t b, std::size_t c,
                       std::size_t d) {
  return ((a * n + b) * n + c) * n + d;
}

// LU decomposition with partial pivoting, in place on a copy. Fills the
// inverse and determinant. Returns false when a pivot vanishes exactly;
// near-degeneracy is the caller's check (it has the determinant).
inline bool lu_invert(std::size_t n, const std::vector<double>& a,
                      std::vector<double>& inv, double& det) {
  std::vector<double> lu = a;
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::fabs(lu[ix2(n, k, k)]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(lu[ix2(n, i, k)]);
      if (v > best) { best = v; p = i; }
    }
    if (best == 0.0) { det = 0.0; return false; }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(lu[ix2(n, p, j)], lu[ix2(n, k, j)]);
      std::swap(piv[p], piv[k]);
      det = -det;
    }
    det *= lu[ix2(n, k, k)];
    for (std::size_t i = k + 1; i < n; ++i) {
      lu[ix2(n, i, k)] /= lu[ix2(n, k, k)];
      for (std::size_t j = k + 1; j < n; ++j)
        lu[ix2(n, i, j)] -= lu[ix2(n, i, k)] * lu[ix2(n, k, j)];
    }
  }
  inv.assign(n * n, 0.0);
  std::vector<double> col(n), y(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) col[i] = piv[i] == c ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = col[i];
      for (std::size_t j = 0; j < i; ++j) y[i] -= lu[ix2(n, i, j)] * y[j];
    }
    for (std::size_t i = n; i-- > 0;) {
      double v = y[i];
      for (std::size_t j = i + 1; j < n; ++j) v -= lu[ix2(n, i, j)] * inv[ix2(n, j, c)];
      inv[ix2(n, i, c)] = v / lu[ix2(n, i, i)];
    }
  }
  return true;
}

} // namespace rigidflow

#endif
