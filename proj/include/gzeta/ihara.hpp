#ifndef GZETA_IHARA_HPP
#define GZETA_IHARA_HPP

// Ihara zeta functions of regular models. Finite graphs use the three-term
// determinant formula. The regularized variant couples the substitution
// x_u = (1 - 1/u)(u(d-1) - 1) to the regularized determinant, normalized so
// that on an n-cycle it is the exact n-th root of the Ihara zeta; on the
// one-dimensional lattice it degenerates to the piecewise closed form 1 on
// 0 < u < 1 and u^2 on u > 1.

#include <cmath>
#include <complex>
#include <vector>

#include "gzeta/determinant.hpp"
#include "gzeta/errors.hpp"
#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/linalg.hpp"

namespace gzeta {

// Common degree of a regular model; throws if degrees differ.
inline int regular_degree(const GraphModel& m) {
  if (!m.is_finite()) return 2 * m.lattice_dim();
  const HalfEdgeGraph& g = m.graph();
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d)
      throw std::domain_error("ihara: model must be regular");
  return d;
}

// x_u = (1 - 1/u)(u(d-1) - 1); invariant under u -> 1/((d-1)u).
inline double ihara_x_map(double u, int degree) {
  return (1.0 - 1.0 / u) * (u * (degree - 1) - 1.0);
}

inline BigRat ihara_x_map(const BigRat& u, int degree) {
  BigRat one(1);
  BigRat r = (one - one / u) * (u * BigRat(degree - 1) - one);
  r.canonicalize();
  return r;
}

// y_u = u (1 - u^2)^{d/2 - 1}.
inline double ihara_y_map(double u, int degree) {
  return u * std::pow(1.0 - u * u, 0.5 * degree - 1.0);
}

// Ihara zeta of a finite d-regular graph on n vertices:
//   Z(u) = [ (1 - u^2)^{(d-2)n/2} det((1 + (d-1)u^2) I - u A) ]^{-1},
// with A = d I - Delta the adjacency matrix.
inline std::complex<double> ihara_zeta_finite(const GraphModel& m,
                                              std::complex<double> u) {
  if (!m.is_finite())
    throw unsupported_error("ihara_zeta_finite: finite models only");
  const int d = regular_degree(m);
  const HalfEdgeGraph& g = m.graph();
  const int n = g.vertex_count();
  IntMatrix lap = laplacian(m);
  std::vector<std::vector<std::complex<double>>> mat(
      static_cast<size_t>(n),
      std::vector<std::complex<double>>(static_cast<size_t>(n)));
  const std::complex<double> diag = 1.0 + double(d - 1) * u * u;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // A = d I - Delta
      double aij = (i == j ? double(d) : 0.0) - lap.at(i, j).get_d();
      mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (i == j ? diag : 0.0) - u * aij;
    }
  // Hadamard bound |det| <= prod_i ||row_i||_2 sets the scale for deciding
  // whether a small computed determinant means an actual zero.
  double hadamard = 1.0;
  for (const auto& row : mat) {
    double s = 0.0;
    for (const auto& v : row) s += std::norm(v);
    hadamard *= std::sqrt(s);
  }
  std::complex<double> det = lu_determinant(std::move(mat));
  if (std::abs(det) <= 1e-12 * hadamard)
    throw pole_error("ihara_zeta_finite: determinant vanishes", u.real());
  const long expo2 = static_cast<long>(d - 2) * n;  // always even
  std::complex<double> prefactor = 1.0;
  if (expo2 != 0) {
    if (std::abs(1.0 - u * u) < 1e-14)
      throw pole_error("ihara_zeta_finite: u^2 = 1", u.real());
    prefactor = std::exp(0.5 * double(expo2) * std::log(1.0 - u * u));
  }
  return 1.0 / (prefactor * det);
}

// Regularized Ihara zeta for real u > 0, u != 1 (and u != 1/(d-1) on finite
// models, where x_u = 0 leaves the determinant domain):
//   finite regular: Z*(u) = [ y_u det*(x_u + Delta) ]^{-1},
//     the exact n-th root of Z on an n-cycle;
//   Lattice(1):     Z*(u) = 1 on 0 < u < 1, u^2 on u > 1.
inline double regularized_ihara(const GraphModel& m, double u) {
  if (!(u > 0.0))
    throw std::domain_error("regularized_ihara: need u > 0");
  if (u == 1.0)
    throw std::domain_error("regularized_ihara: u = 1 is excluded");
  if (!m.is_finite()) {
    if (m.lattice_dim() != 1)
      throw unsupported_error(
          "regularized_ihara: no regularized determinant for Z^d, d >= 2");
    return u < 1.0 ? 1.0 : u * u;
  }
  const int d = regular_degree(m);
  const double x = ihara_x_map(u, d);
  if (!(x > 0.0))
    throw std::domain_error(
        "regularized_ihara: x_u is not in the determinant domain");
  const double y = ihara_y_map(u, d);
  return 1.0 / (y * regdet(m, x));
}

// Functional equation under u' = 1/((d-1) u). Finite regular models satisfy
//   Z*(u') = (y_u / y_{u'}) Z*(u)
// (both sides share det*(x_u + Delta) since x is invariant); the
// one-dimensional lattice satisfies Z*(1/u) = u^{-2} Z*(u). Returns whether
// the relation holds to relative error 1e-9.
inline bool check_ihara_functional(const GraphModel& m, double u) {
  const int d = regular_degree(m);
  const double up = 1.0 / (double(d - 1) * u);
  double lhs = regularized_ihara(m, up);
  double rhs;
  if (!m.is_finite()) {
    rhs = regularized_ihara(m, u) / (u * u);
  } else {
    rhs = (ihara_y_map(u, d) / ihara_y_map(up, d)) * regularized_ihara(m, u);
  }
  double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
  return std::fabs(lhs - rhs) / scale <= 1e-9;
}

}  // namespace gzeta

#endif  // GZETA_IHARA_HPP
