#ifndef GZETA_EXACT_HPP
#define GZETA_EXACT_HPP

// Exact integer / rational helpers on top of GMP, plus the small
// combinatorial kernels (factorials, binomials, compositions) shared by the
// lattice formulas.

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace gzeta {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// k! / (parts[0]! * parts[1]! * ...) where the parts sum to k.
inline BigInt multinomial(const std::vector<int>& parts) {
  unsigned long total = 0;
  for (int p : parts) total += static_cast<unsigned long>(p);
  BigInt r = factorial(total);
  for (int p : parts) {
    BigInt d = factorial(static_cast<unsigned long>(p));
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

// Exact quotient with a divisibility assertion.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
  BigRat q(a, b);
  q.canonicalize();
  if (q.get_den() != 1)
    throw std::logic_error("div_exact: quotient is not an integer");
  return q.get_num();
}

// Calls f(parts) for every ordered tuple of `count` non-negative integers
// summing to `total`.
template <typename F>
inline void for_each_composition(int total, int count, F&& f) {
  std::vector<int> parts(static_cast<size_t>(count > 0 ? count : 0), 0);
  const std::vector<int>& view = parts;
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == count - 1) {
      parts[static_cast<size_t>(pos)] = remaining;
      f(view);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (count <= 0) {
    if (total == 0) f(view);
    return;
  }
  rec(rec, 0, total);
}

// Continued-fraction rationalization: smallest-denominator p/q with
// |x - p/q| <= tol and q <= max_den, or nullopt if none exists.
inline std::optional<BigRat> snap_rational(double x, double tol,
                                           unsigned long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  double sign = x < 0 ? -1.0 : 1.0;
  double y = std::fabs(x);
  long long h_prev = 1, h = static_cast<long long>(std::floor(y));
  long long k_prev = 0, k = 1;
  double frac = y - std::floor(y);
  for (int iter = 0; iter < 64; ++iter) {
    double approx = static_cast<double>(h) / static_cast<double>(k);
    if (std::fabs(y - approx) <= tol) {
      BigRat r(static_cast<long>(h), static_cast<unsigned long>(k));
      r.canonicalize();
      return sign < 0 ? BigRat(-r) : r;
    }
    if (frac < 1e-18) break;
    double inv = 1.0 / frac;
    double a = std::floor(inv);
    if (a > 9e17) break;
    frac = inv - a;
    long long an = static_cast<long long>(a);
    long long h_next = an * h + h_prev;
    long long k_next = an * k + k_prev;
    if (k_next > static_cast<long long>(max_den) || k_next <= 0) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "p" when q == 1, "p/q" otherwise.
inline std::string to_string(const BigRat& v) {
  BigRat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// 17 significant digits: lossless round-trip for IEEE doubles.
inline std::string to_string_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

inline double to_double(const BigInt& v) { return v.get_d(); }
inline double to_double(const BigRat& v) { return v.get_d(); }

}  // namespace gzeta

#endif  // GZETA_EXACT_HPP
