#ifndef GZETA_LINALG_HPP
#define GZETA_LINALG_HPP

// Dense linear algebra kernels: a cyclic Jacobi eigensolver for real
// symmetric matrices and an LU determinant for complex matrices. Matrices
// here are small (graph Laplacians of a few hundred vertices at most), so
// simplicity and accuracy win over asymptotics.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gzeta {

struct EigenDecomposition {
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[j] <-> eigenvalues[j]
};

// Cyclic Jacobi iteration; sweeps until the off-diagonal Frobenius mass is
// below tol * ||A||_F.
inline EigenDecomposition jacobi_eigen(std::vector<std::vector<double>> a,
                                       double tol = 1e-12) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n)
      throw std::invalid_argument("jacobi_eigen: matrix must be square");
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  double norm = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) norm += a[i][j] * a[i][j];
  norm = std::sqrt(norm);
  const double stop = (norm > 0 ? norm : 1.0) * tol;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) off += 2.0 * a[i][j] * a[i][j];
    if (std::sqrt(off) <= stop) break;
    for (size_t p = 0; p + 1 < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (std::fabs(apq) <= 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double app = a[p][p], aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (size_t k = 0; k < n; ++k) {
          if (k != p && k != q) {
            double akp = a[k][p], akq = a[k][q];
            a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
            a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
          }
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = vkp - s * (vkq + tau * vkp);
          v[k][q] = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return a[x][x] < a[y][y]; });
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.assign(n, std::vector<double>(n, 0.0));
  for (size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a[order[j]][order[j]];
    for (size_t i = 0; i < n; ++i) out.eigenvectors[j][i] = v[i][order[j]];
  }
  return out;
}

// Determinant via LU with partial pivoting.
inline std::complex<double> lu_determinant(
    std::vector<std::vector<std::complex<double>>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("lu_determinant: matrix must be square");
  std::complex<double> det = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    double best = std::abs(m[col][col]);
    for (size_t r = col + 1; r < n; ++r) {
      double mag = std::abs(m[r][col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      std::complex<double> f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace gzeta

#endif  // GZETA_LINALG_HPP
