#ifndef GZETA_SPECTRAL_HPP
#define GZETA_SPECTRAL_HPP

// Rooted spectral measures and the analysis built directly on them: the
// lattice resolvent, Stieltjes inversion, heat functions, and convolution of
// atomic measures. Finite graphs produce purely atomic measures with exact
// rational weights (eigenprojection magnitudes snapped by continued
// fractions); integer lattices carry a symbolic density descriptor.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "gzeta/errors.hpp"
#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/linalg.hpp"
#include "gzeta/specfun.hpp"

namespace gzeta {

inline constexpr double kEigenClusterTol = 1e-9;

enum class DensityKind {
  None,          // purely atomic
  ArcsineZ,      // d/dx of the Z spectral measure: 1/(pi sqrt(x(4-x))) on [0,4]
  LatticePower,  // d-fold additive convolution of ArcsineZ, on [0,4d]
};

struct SpectralAtom {
  double lambda;
  BigRat weight;
};

struct SpectralMeasure {
  std::vector<SpectralAtom> atoms;  // sorted by lambda
  DensityKind density = DensityKind::None;
  int lattice_dim = 0;  // for ArcsineZ / LatticePower

  bool pure_atomic() const { return density == DensityKind::None; }
  BigRat atom_mass() const {
    BigRat s = 0;
    for (const auto& a : atoms) s += a.weight;
    return s;
  }
};

// Rooted spectral measure of a model. Finite: eigen-decompose the Laplacian,
// cluster eigenvalues at tolerance 1e-9 (values inside the tolerance of an
// integer are snapped to it), and recover each cluster weight
// sum_i <root|v_i>^2 as an exact rational. The weights sum to exactly 1.
inline SpectralMeasure spectral_measure(const GraphModel& m) {
  SpectralMeasure mu;
  if (!m.is_finite()) {
    mu.density = m.lattice_dim() == 1 ? DensityKind::ArcsineZ
                                      : DensityKind::LatticePower;
    mu.lattice_dim = m.lattice_dim();
    return mu;
  }
  EigenDecomposition eig = jacobi_eigen(laplacian(m).to_double());
  const size_t n = eig.eigenvalues.size();
  const int root = m.root();
  size_t i = 0;
  std::vector<std::pair<double, double>> clusters;  // (lambda, raw weight)
  while (i < n) {
    size_t j = i;
    double lo = eig.eigenvalues[i];
    double raw = 0.0;
    while (j < n && eig.eigenvalues[j] - lo <= kEigenClusterTol) {
      double c = eig.eigenvectors[j][static_cast<size_t>(root)];
      raw += c * c;
      ++j;
    }
    double lambda = 0.0;
    for (size_t t = i; t < j; ++t) lambda += eig.eigenvalues[t];
    lambda /= static_cast<double>(j - i);
    if (std::fabs(lambda - std::round(lambda)) <= kEigenClusterTol)
      lambda = std::round(lambda);
    clusters.emplace_back(lambda, raw);
    i = j;
  }
  BigRat mass = 0;
  size_t heaviest = 0;
  double heaviest_raw = -1.0;
  for (const auto& [lambda, raw] : clusters) {
    if (raw < 1e-12) continue;  // root has no component in this eigenspace
    auto snapped = snap_rational(raw, 1e-9, 1000000);
    BigRat w = snapped ? *snapped : BigRat(raw);
    w.canonicalize();
    if (w <= 0) continue;
    mu.atoms.push_back({lambda, w});
    mass += w;
    if (raw > heaviest_raw) {
      heaviest_raw = raw;
      heaviest = mu.atoms.size() - 1;
    }
  }
  // Fold any snapping residue into the heaviest atom so the mass is exactly 1.
  if (!mu.atoms.empty() && mass != 1) mu.atoms[heaviest].weight += 1 - mass;
  std::sort(mu.atoms.begin(), mu.atoms.end(),
            [](const SpectralAtom& a, const SpectralAtom& b) {
              return a.lambda < b.lambda;
            });
  return mu;
}

// Resolvent of the Z Laplacian: <delta_i, (x - Delta)^{-1} delta_j>.
// With w = sqrt(x) sqrt(x-4) (principal square roots, so w ~ x at infinity)
// and r = (2 - x - w)/2 the branch with |r| <= 1,
//   R_ij(x) = r^{|i-j|} / w.
// Defined off the spectrum [0, 4].
inline std::complex<double> resolvent_z(std::complex<double> x, long i,
                                        long j) {
  if (x.imag() == 0.0 && x.real() >= 0.0 && x.real() <= 4.0)
    throw pole_error("resolvent_z: x lies on the spectrum [0,4]", x.real());
  std::complex<double> w = std::sqrt(x) * std::sqrt(x - 4.0);
  // Contracting root of r^2 - (2 - x) r + 1 = 0; the defining equation at the
  // root, (x - 2) + 2r = w, fixes the branch to (2 - x + w) / 2.
  std::complex<double> r = (2.0 - x + w) / 2.0;
  std::complex<double> pw = 1.0;
  for (long k = 0; k < std::labs(i - j); ++k) pw *= r;
  return pw / w;
}

// -Im R_00(x + i eps) / pi; converges to the arcsine density
// 1/(pi sqrt(x(4-x))) as eps -> 0 for x in (0, 4).
inline double stieltjes_density_check(double x, double eps) {
  if (!(x > 0.0 && x < 4.0))
    throw std::domain_error("stieltjes_density_check: need 0 < x < 4");
  if (!(eps > 0.0))
    throw std::domain_error("stieltjes_density_check: need eps > 0");
  std::complex<double> r = resolvent_z({x, eps}, 0, 0);
  return -r.imag() / kPi;
}

// Heat function H_t = integral of e^{-t lambda} over the rooted measure.
// Finite: sum of w e^{-lambda t}. Z^d: (e^{-2t} I0(2t))^d, evaluated through
// the scaled Bessel function so large t stays finite.
inline double heat_function(const GraphModel& m, double t) {
  if (!(t >= 0.0)) throw std::domain_error("heat_function: need t >= 0");
  if (!m.is_finite()) {
    double one_dim = bessel_i0_scaled(2.0 * t);
    return std::pow(one_dim, m.lattice_dim());
  }
  SpectralMeasure mu = spectral_measure(m);
  double h = 0.0;
  for (const auto& a : mu.atoms)
    h += to_double(a.weight) * std::exp(-a.lambda * t);
  return h;
}

// Additive convolution of two purely atomic measures: atoms at all pairwise
// sums, weights multiplied, then coalesced at tolerance 1e-9. This is the
// rooted measure of the box product when the factors are rooted measures.
inline SpectralMeasure convolve_atomic(const SpectralMeasure& a,
                                       const SpectralMeasure& b) {
  if (!a.pure_atomic() || !b.pure_atomic())
    throw unsupported_error("convolve_atomic: both measures must be atomic");
  std::vector<SpectralAtom> all;
  all.reserve(a.atoms.size() * b.atoms.size());
  for (const auto& x : a.atoms)
    for (const auto& y : b.atoms)
      all.push_back({x.lambda + y.lambda, x.weight * y.weight});
  std::sort(all.begin(), all.end(),
            [](const SpectralAtom& p, const SpectralAtom& q) {
              return p.lambda < q.lambda;
            });
  SpectralMeasure out;
  for (size_t i = 0; i < all.size();) {
    size_t j = i;
    double lo = all[i].lambda;
    double lsum = 0.0;
    BigRat w = 0;
    while (j < all.size() && all[j].lambda - lo <= kEigenClusterTol) {
      lsum += all[j].lambda;
      w += all[j].weight;
      ++j;
    }
    double lambda = lsum / static_cast<double>(j - i);
    if (std::fabs(lambda - std::round(lambda)) <= kEigenClusterTol)
      lambda = std::round(lambda);
    w.canonicalize();
    out.atoms.push_back({lambda, w});
    i = j;
  }
  return out;
}

// Numeric k-th moment of a measure. Atoms sum directly; the arcsine density
// integrates by midpoint rule after x = 2 - 2 cos(theta); LatticePower(d)
// moments come from the d-fold binomial convolution of the arcsine moments.
inline double measure_moment(const SpectralMeasure& mu, int k,
                             int quadrature_nodes = 10000) {
  if (k < 0) throw std::invalid_argument("measure_moment: k must be >= 0");
  double total = 0.0;
  for (const auto& a : mu.atoms)
    total += to_double(a.weight) * std::pow(a.lambda, k);
  if (mu.pure_atomic()) return total;

  auto arcsine_moment = [&](int kk) {
    // (1/pi) \int_0^pi (2 - 2 cos t)^kk dt
    double h = kPi / quadrature_nodes;
    double s = 0.0;
    for (int i = 0; i < quadrature_nodes; ++i) {
      double t = (i + 0.5) * h;
      s += std::pow(2.0 - 2.0 * std::cos(t), kk);
    }
    return s * h / kPi;
  };
  const int d = mu.lattice_dim;
  if (d == 1) return total + arcsine_moment(k);
  std::vector<double> m1(static_cast<size_t>(k) + 1);
  for (int kk = 0; kk <= k; ++kk) m1[static_cast<size_t>(kk)] = arcsine_moment(kk);
  double md = 0.0;
  for_each_composition(k, d, [&](const std::vector<int>& parts) {
    double term = to_double(multinomial(parts));
    for (int p : parts) term *= m1[static_cast<size_t>(p)];
    md += term;
  });
  return total + md;
}

}  // namespace gzeta

#endif  // GZETA_SPECTRAL_HPP
