#ifndef GZETA_ZETA_HPP
#define GZETA_ZETA_HPP

// Spectral zeta functions. Finite models evaluate as finite sums over the
// rooted measure. The one-dimensional lattice has a gamma-quotient closed
// form; general lattices get exact values at non-positive integers, a Mellin
// quadrature inside the convergence strip, residue data at the half-line
// poles, and a meromorphic continuation built from the small-t series and
// the large-t expansion of the heat function.

#include <cmath>
#include <complex>
#include <vector>

#include "gzeta/errors.hpp"
#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/specfun.hpp"
#include "gzeta/spectral.hpp"

namespace gzeta {

// zeta at s for a finite model: sum of w_i lambda_i^{-s} over the nonzero
// atoms of the rooted measure. `transitive` reports whether the equal-weights
// shortcut (multiplicity/n per eigenvalue, valid on vertex-transitive graphs)
// applies; the rooted sum coincides with it in that case.
struct FiniteZetaValue {
  std::complex<double> value;
  bool transitive;
};

inline FiniteZetaValue zeta_finite_transitive(const GraphModel& m,
                                              std::complex<double> s) {
  if (!m.is_finite())
    throw unsupported_error("zeta_finite_transitive: finite models only");
  SpectralMeasure mu = spectral_measure(m);
  std::complex<double> total = 0.0;
  for (const auto& a : mu.atoms) {
    if (a.lambda <= kEigenClusterTol) continue;  // zero eigenvalue is excluded
    total += to_double(a.weight) *
             std::exp(-s * std::log(std::complex<double>(a.lambda)));
  }
  return {total, m.known_transitive()};
}

// Closed form for Z: zeta(s) = Gamma(1 - 2s) / Gamma(1 - s)^2. Poles exactly
// at s in {1/2, 3/2, 5/2, ...}; zeros at positive integers (the gamma pole
// downstairs is double, the one upstairs simple).
inline std::complex<double> zeta_z_closed(std::complex<double> s) {
  if (std::fabs(s.imag()) <= 1e-12) {
    double two_s = 2.0 * s.real();
    double r = std::round(two_s);
    if (std::fabs(two_s - r) <= 1e-12 && r >= 1.0) {
      long ri = static_cast<long>(r);
      if (ri % 2 == 1)
        throw pole_error("zeta_z_closed: pole at half-odd-integer s",
                         s.real());
      return 0.0;  // positive integer s
    }
  }
  return std::exp(log_gamma(1.0 - 2.0 * s) - 2.0 * log_gamma(1.0 - s));
}

// Exact zeta of Z^d at s = -k: the k-th rooted moment, via the multinomial
// expansion over compositions of k into d parts with central-binomial
// factors.
inline BigInt zeta_lattice_negint(int d, int k) {
  if (d < 1 || k < 0)
    throw std::invalid_argument("zeta_lattice_negint: need d >= 1, k >= 0");
  BigInt total = 0;
  for_each_composition(k, d, [&](const std::vector<int>& parts) {
    BigInt term = multinomial(parts);
    for (int p : parts)
      term *= central_binomial(static_cast<unsigned long>(p));
    total += term;
  });
  return total;
}

namespace detail {

// Asymptotic expansion of the heat function on Z^d:
//   H_t ~ (4 pi t)^{-d/2} (c_0 + c_1/t + c_2/t^2 + ...),
// where for d = 1 the coefficients are mu_j / 2^j (mu from the Bessel
// expansion) and for general d the d-fold convolution power.
inline std::vector<double> heat_tail_coeffs(int d, int terms) {
  std::vector<double> b(static_cast<size_t>(terms));
  double mu = 1.0;
  b[0] = 1.0;
  for (int j = 1; j < terms; ++j) {
    mu *= double(2 * j - 1) * double(2 * j - 1) / (8.0 * double(j));
    b[static_cast<size_t>(j)] = mu / std::pow(2.0, j);
  }
  std::vector<double> c(static_cast<size_t>(terms), 0.0);
  c[0] = 1.0;
  for (int rep = 1; rep < d; ++rep) {
    std::vector<double> next(static_cast<size_t>(terms), 0.0);
    for (int i = 0; i < terms; ++i)
      for (int j = 0; i + j < terms; ++j)
        next[static_cast<size_t>(i + j)] +=
            c[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    c.swap(next);
  }
  if (d == 1) c = b;
  return c;
}

// Exact rational core of the same coefficients: w_k = rho_k Gamma(k + d/2)
// satisfies w_k = core(d, k) * pi^{-d/2} with
//   core(d, k) = T(d, k) / 2^{6k + d},
//   T(d, k) = sum over compositions of k of prod (2l)! binom(2l, l) / l!.
inline BigRat heat_tail_core(int d, int k) {
  BigInt t_sum = 0;
  for_each_composition(k, d, [&](const std::vector<int>& parts) {
    BigInt term = 1;
    for (int p : parts) {
      unsigned long pu = static_cast<unsigned long>(p);
      term *= factorial(2 * pu) * central_binomial(pu);
      term = div_exact(term, factorial(pu));
    }
    t_sum += term;
  });
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(6 * k + d));
  BigRat core(t_sum, den);
  core.canonicalize();
  return core;
}

inline double heat_tail_coeff_value(int d, int k) {
  return to_double(heat_tail_core(d, k)) * std::pow(kPi, -0.5 * d);
}

// Composite Simpson rule for f on [a, b] with an even number of intervals.
template <typename F>
inline std::complex<double> simpson(F&& f, double a, double b, int intervals) {
  if (intervals < 2) intervals = 2;
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  std::complex<double> acc = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    acc += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

}  // namespace detail

// Direct Mellin evaluation inside the convergence strip 0 < Re s < d/2:
//   zeta(s) = (1/Gamma(s)) \int_0^inf H_t t^{s-1} dt.
// [0, 1/2] uses the exact alternating moment series of H_t; [1/2, t_max] is
// Simpson in log t; beyond t_max the integrand is replaced by the heat
// asymptotics and integrated in closed form (a raw cutoff would lose
// everything near the strip edge, where the tail decays like t^{s - d/2}).
inline std::complex<double> zeta_mellin(const GraphModel& m,
                                        std::complex<double> s,
                                        double t_max = 200.0,
                                        int n_nodes = 4000) {
  if (m.is_finite())
    throw unsupported_error(
        "zeta_mellin: integral diverges for finite models (zero eigenvalue)");
  const int d = m.lattice_dim();
  if (!(s.real() > 0.0 && s.real() < 0.5 * d))
    throw std::domain_error(
        "zeta_mellin: s outside the convergence strip 0 < Re s < d/2");
  if (!(t_max >= 10.0))
    throw std::invalid_argument("zeta_mellin: t_max must be >= 10");
  if (n_nodes < 16) throw std::invalid_argument("zeta_mellin: n_nodes too small");

  const double t0 = 0.5;
  // Head: H_t = sum (-1)^n m_n t^n / n!, integrated term by term.
  std::complex<double> head = 0.0;
  BigRat q(1);  // m_n / n!
  for (int n = 0; n <= 120; ++n) {
    if (n > 0) {
      BigRat num(zeta_lattice_negint(d, n), factorial(static_cast<unsigned long>(n)));
      num.canonicalize();
      q = num;
    }
    double qd = to_double(q);
    std::complex<double> term = qd *
                                std::exp((double(n) + s) * std::log(t0)) /
                                (double(n) + s);
    if (n % 2 == 1) term = -term;
    head += term;
    if (n >= 8 && qd * std::pow(t0, n) < 1e-18) break;
  }

  // Middle: Simpson in u = log t over [log t0, log t_max].
  auto integrand = [&](double u) -> std::complex<double> {
    double t = std::exp(u);
    double h = std::pow(bessel_i0_scaled(2.0 * t), d);
    return h * std::exp(s * u);
  };
  std::complex<double> middle =
      detail::simpson(integrand, std::log(t0), std::log(t_max), n_nodes);

  // Tail: integrate the large-t expansion term by term on [t_max, inf).
  const int tail_terms = 8;
  std::vector<double> c = detail::heat_tail_coeffs(d, tail_terms);
  const double front = std::pow(4.0 * kPi, -0.5 * d);
  std::complex<double> tail = 0.0;
  for (int j = 0; j < tail_terms; ++j) {
    std::complex<double> expo = s - 0.5 * d - double(j);
    tail += front * c[static_cast<size_t>(j)] *
            std::exp(expo * std::log(t_max)) / (-expo);
  }

  return (head + middle + tail) * std::exp(-log_gamma(s));
}

// rho coefficient of the heat expansion H_t ~ sum rho_k Gamma(k + d/2)
// t^{-(k + d/2)}: the exact value is rational * pi^{-pi_power} with
// pi_power = ceil(d/2) (odd d absorbs a sqrt(pi) from the half-integer
// gamma value).
struct LatticeRhoCoeff {
  int d = 0;
  int k = 0;
  BigRat rational;  // positive
  int pi_power = 0;
  double value = 0.0;
};

inline LatticeRhoCoeff lattice_rho_coeff(int d, int k) {
  if (d < 1 || k < 0)
    throw std::invalid_argument("lattice_rho_coeff: need d >= 1, k >= 0");
  LatticeRhoCoeff out;
  out.d = d;
  out.k = k;
  BigRat core = detail::heat_tail_core(d, k);  // = rho * Gamma(k+d/2) * pi^{d/2}
  if (d % 2 == 0) {
    // Gamma(k + d/2) = (k + d/2 - 1)!
    out.rational = core / BigRat(factorial(
        static_cast<unsigned long>(k + d / 2 - 1)));
    out.pi_power = d / 2;
  } else {
    // Gamma(k + d/2) = (2m)! sqrt(pi) / (4^m m!), m = k + (d-1)/2
    unsigned long mm = static_cast<unsigned long>(k) +
                       static_cast<unsigned long>((d - 1) / 2);
    BigInt four_m = 1;
    mpz_mul_2exp(four_m.get_mpz_t(), four_m.get_mpz_t(), 2 * mm);
    out.rational = core * BigRat(four_m * factorial(mm), factorial(2 * mm));
    out.pi_power = (d + 1) / 2;
  }
  out.rational.canonicalize();
  out.value = to_double(out.rational) * std::pow(kPi, -out.pi_power);
  return out;
}

// Residue of the lattice zeta at its pole s = k + d/2:
//   Res = -S(d, k) / ((4 pi)^{d/2} 2^{6k} k! Gamma(k + d/2)) = -rho_k,
// where S(d, k) sums multinomial(k; l) prod binom(2l, l) (2l)! over
// compositions. `core` keeps the integer S; rational/pi_power give the exact
// residue as -rational * pi^{-pi_power}.
struct LatticeResidue {
  int d = 0;
  int k = 0;
  double pole = 0.0;  // s-location, k + d/2
  BigInt core;        // S(d, k)
  BigRat rational;    // positive; residue = -rational * pi^{-pi_power}
  int pi_power = 0;
  double value = 0.0;
};

inline BigInt residue_core_sum(int d, int k) {
  BigInt s_sum = 0;
  for_each_composition(k, d, [&](const std::vector<int>& parts) {
    BigInt term = multinomial(parts);
    for (int p : parts) {
      unsigned long pu = static_cast<unsigned long>(p);
      term *= central_binomial(pu) * factorial(2 * pu);
    }
    s_sum += term;
  });
  return s_sum;
}

inline LatticeResidue residue_lattice(int d, int k) {
  if (d < 1 || k < 0)
    throw std::invalid_argument("residue_lattice: need d >= 1, k >= 0");
  LatticeResidue out;
  out.d = d;
  out.k = k;
  out.pole = static_cast<double>(k) + 0.5 * d;
  out.core = residue_core_sum(d, k);
  BigInt den = factorial(static_cast<unsigned long>(k));
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(6 * k + d));
  BigRat base(out.core, den);  // S / (2^{6k+d} k!)
  base.canonicalize();
  if (d % 2 == 0) {
    out.rational = base / BigRat(factorial(
        static_cast<unsigned long>(k + d / 2 - 1)));
    out.pi_power = d / 2;
  } else {
    unsigned long mm = static_cast<unsigned long>(k) +
                       static_cast<unsigned long>((d - 1) / 2);
    BigInt four_m = 1;
    mpz_mul_2exp(four_m.get_mpz_t(), four_m.get_mpz_t(), 2 * mm);
    out.rational = base * BigRat(four_m * factorial(mm), factorial(2 * mm));
    out.pi_power = (d + 1) / 2;
  }
  out.rational.canonicalize();
  out.value = -to_double(out.rational) * std::pow(kPi, -out.pi_power);
  return out;
}

// Functional identity for Z^2 at s = -k, reduced to exact integers:
//   S(2, k) = zeta_{Z^2}(-k) * 2^k * (k!)^2.
// Both sides are computed by independent enumerations.
inline bool check_functional_z2(int k) {
  if (k < 0) throw std::invalid_argument("check_functional_z2: k must be >= 0");
  BigInt lhs = residue_core_sum(2, k);
  BigInt two_k = 1;
  mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(),
               static_cast<unsigned long>(k));
  BigInt fk = factorial(static_cast<unsigned long>(k));
  BigInt rhs = zeta_lattice_negint(2, k) * two_k * fk * fk;
  return lhs == rhs;
}

// Meromorphic continuation of the lattice zeta to Re s < M:
//   Gamma(s) zeta(s) = sum_{n<=N} (-1)^n (m_n/n!) / (n + s)
//                    + sum_{k: k-1+d/2 < M} w_k / (k + d/2 - s)
//                    + \int_1^inf (H_t - sum_k w_k t^{-(k+d/2)}) t^{s-1} dt,
// with w_k = rho_k Gamma(k + d/2). Exact non-positive integer s short-circuits
// to the exact moment value. Poles at s = k + d/2 inside the strip raise
// pole_error.
inline std::complex<double> zeta_lattice_continuation(int d,
                                                      std::complex<double> s,
                                                      int strip_bound,
                                                      int series_terms) {
  if (d < 1)
    throw std::invalid_argument("zeta_lattice_continuation: need d >= 1");
  if (strip_bound < 1 || series_terms < 1)
    throw std::invalid_argument(
        "zeta_lattice_continuation: need strip_bound >= 1, series_terms >= 1");
  const double M = static_cast<double>(strip_bound);
  if (!(s.real() < M))
    throw std::domain_error(
        "zeta_lattice_continuation: Re s must be below the strip bound");

  const bool on_real_axis = std::fabs(s.imag()) <= 1e-12;
  if (on_real_axis) {
    double r = std::round(s.real());
    if (r <= 0.0 && std::fabs(s.real() - r) <= 1e-12) {
      BigInt exact = zeta_lattice_negint(d, static_cast<int>(-r));
      return {to_double(exact), 0.0};
    }
    for (int k = 0; 2 * k + d <= 2 * strip_bound + 2; ++k) {
      double pole = k + 0.5 * d;
      if (std::fabs(s.real() - pole) <= 1e-9)
        throw pole_error("zeta_lattice_continuation: pole at s = k + d/2",
                         pole);
    }
  }

  // Moment series over [0, 1].
  std::complex<double> series = 0.0;
  for (int n = 0; n <= series_terms; ++n) {
    BigRat q(zeta_lattice_negint(d, n),
             factorial(static_cast<unsigned long>(n)));
    q.canonicalize();
    std::complex<double> term = to_double(q) / (double(n) + s);
    if (n % 2 == 1) term = -term;
    series += term;
  }

  // Subtracted pole terms: every k with alpha_k = k - 1 + d/2 < M.
  std::vector<double> w;
  for (int k = 0; k - 1.0 + 0.5 * d < M; ++k)
    w.push_back(detail::heat_tail_coeff_value(d, k));
  std::complex<double> pole_sum = 0.0;
  for (size_t k = 0; k < w.size(); ++k)
    pole_sum += w[k] / (double(k) + 0.5 * d - s);

  // Numeric integral over [1, T] of the subtracted heat function, then the
  // analytic continuation of the next few asymptotic orders over [T, inf).
  const double t_cap = 300.0;
  auto integrand = [&](double u) -> std::complex<double> {
    double t = std::exp(u);
    double h = std::pow(bessel_i0_scaled(2.0 * t), d);
    for (size_t k = 0; k < w.size(); ++k)
      h -= w[k] * std::pow(t, -(double(k) + 0.5 * d));
    return h * std::exp(s * u);
  };
  std::complex<double> integral =
      detail::simpson(integrand, 0.0, std::log(t_cap), 4000);
  const int extra = 6;
  for (size_t k = w.size(); k < w.size() + extra; ++k) {
    double wk = detail::heat_tail_coeff_value(d, static_cast<int>(k));
    std::complex<double> expo = s - (double(k) + 0.5 * d);
    integral += wk * std::exp(expo * std::log(t_cap)) / (-expo);
  }

  return (series + pole_sum + integral) * std::exp(-log_gamma(s));
}

}  // namespace gzeta

#endif  // GZETA_ZETA_HPP
