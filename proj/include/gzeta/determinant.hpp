#ifndef GZETA_DETERMINANT_HPP
#define GZETA_DETERMINANT_HPP

// Regularized determinants det*(x + Delta) = exp(int log(x + y) dmu(y)),
// their large-x Laurent expansions with exact rational coefficients,
// characteristic polynomials of cycle Laplacians (closed form and exact
// Faddeev-LeVerrier), and rooted spanning-forest counts.

#include <cmath>
#include <map>
#include <vector>

#include "gzeta/errors.hpp"
#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/spectral.hpp"
#include "gzeta/zeta.hpp"

namespace gzeta {

// Finite Laurent tail in 1/x: coefficient map keyed by degree, descending.
// Series produced here run from degree 1 (leading x) down to -(order - 1).
struct LaurentSeries {
  std::map<int, BigRat, std::greater<int>> coefficients;

  BigRat coefficient(int degree) const {
    auto it = coefficients.find(degree);
    return it == coefficients.end() ? BigRat(0) : it->second;
  }
  int min_degree() const {
    return coefficients.empty() ? 0 : coefficients.rbegin()->first;
  }
  double evaluate(double x) const {
    double s = 0.0;
    for (const auto& [deg, c] : coefficients)
      s += to_double(c) * std::pow(x, deg);
    return s;
  }
};

// det*(x + Delta) for x > 0. Finite models: exact exp/log over the atoms of
// the rooted measure, i.e. prod (x + lambda_i)^{w_i}. Lattice(1):
//   det*(x + Delta) = x/2 + 1 + sqrt(x (4 + x)) / 2.
// Higher-dimensional lattices have no closed form here.
inline double regdet(const GraphModel& m, double x) {
  if (!(x > 0.0)) throw std::domain_error("regdet: need x > 0");
  if (!m.is_finite()) {
    if (m.lattice_dim() != 1)
      throw unsupported_error("regdet: no closed form for Z^d with d >= 2");
    return 0.5 * x + 1.0 + 0.5 * std::sqrt(x * (4.0 + x));
  }
  SpectralMeasure mu = spectral_measure(m);
  double acc = 0.0;
  for (const auto& a : mu.atoms)
    acc += to_double(a.weight) * std::log(x + a.lambda);
  return std::exp(acc);
}

// Large-x expansion of det*(x + Delta), truncated at degree -(order - 1):
//   log det*(x + Delta) = log x + sum_{k>=1} (-1)^{k+1} m_k / (k x^k),
// exponentiated formally. The moments m_k are exact, so the coefficients are
// exact rationals. Leading terms: x + (root degree) + O(1/x).
inline LaurentSeries regdet_series(const GraphModel& m, int order) {
  if (order < 1) throw std::invalid_argument("regdet_series: order must be >= 1");
  // c_k = (-1)^{k+1} m_k / k; e_n = [y^n] exp(sum c_k y^k), y = 1/x.
  std::vector<BigRat> c(static_cast<size_t>(order) + 1, BigRat(0));
  for (int k = 1; k <= order; ++k) {
    BigInt mk = spectral_moment(m, k);
    BigRat ck(mk, BigInt(k));
    ck.canonicalize();
    if (k % 2 == 0) ck = -ck;
    c[static_cast<size_t>(k)] = ck;
  }
  std::vector<BigRat> e(static_cast<size_t>(order) + 1, BigRat(0));
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    BigRat acc = 0;
    for (int j = 1; j <= n; ++j)
      acc += BigRat(j) * c[static_cast<size_t>(j)] * e[static_cast<size_t>(n - j)];
    acc /= n;
    acc.canonicalize();
    e[static_cast<size_t>(n)] = acc;
  }
  LaurentSeries s;
  for (int n = 0; n <= order; ++n) {
    if (1 - n < -(order - 1)) break;
    s.coefficients[1 - n] = e[static_cast<size_t>(n)];
  }
  return s;
}

// Integer polynomial, constant term first.
struct IntPolynomial {
  std::vector<BigInt> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (size_t i = coefficients.size(); i-- > 0;)
      acc = acc * x + coefficients[i];
    return acc;
  }
  double evaluate(double x) const {
    double acc = 0.0;
    for (size_t i = coefficients.size(); i-- > 0;)
      acc = acc * x + to_double(coefficients[i]);
    return acc;
  }
};

// det(x + Delta) for the n-cycle, by the closed form
//   [x^{n-l}] = binom(2n - l, l) * 2n / (2n - l),  l = 0..n-1,
// with zero constant term.
inline IntPolynomial charpoly_cycle(int n) {
  if (n < 3) throw std::invalid_argument("charpoly_cycle: need n >= 3");
  IntPolynomial p;
  p.coefficients.assign(static_cast<size_t>(n) + 1, BigInt(0));
  for (int l = 0; l <= n - 1; ++l) {
    BigInt c = binomial(static_cast<unsigned long>(2 * n - l),
                        static_cast<unsigned long>(l)) *
               BigInt(2 * n);
    p.coefficients[static_cast<size_t>(n - l)] =
        div_exact(c, BigInt(2 * n - l));
  }
  return p;
}

// det(x + Delta) of any finite model with |V| <= 64, by the
// Faddeev-LeVerrier recurrence on -Delta in exact integers (each trace
// division is checked to be exact).
inline IntPolynomial charpoly_exact(const GraphModel& m) {
  IntMatrix lap = laplacian(m);
  const int n = lap.size();
  if (n > 64)
    throw resource_error("charpoly_exact: graph larger than 64 vertices");
  IntMatrix a(n);  // -Delta
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = -lap.at(i, j);
  IntPolynomial p;
  p.coefficients.assign(static_cast<size_t>(n) + 1, BigInt(0));
  p.coefficients[static_cast<size_t>(n)] = 1;
  IntMatrix b = IntMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix c = a.mul(b);
    BigInt coeff = div_exact(-c.trace(), BigInt(k));
    p.coefficients[static_cast<size_t>(n - k)] = coeff;
    b = c;
    for (int i = 0; i < n; ++i) b.at(i, i) += coeff;
  }
  return p;
}

// Number of rooted spanning forests of the n-cycle with exactly k trees:
//   R_n(k) = binom(n + k, n - k) * 2n / (n + k).
// Equals the x^k coefficient of det(x + Delta).
inline BigInt forest_count_cycle(int n, int k) {
  if (n < 3) throw std::invalid_argument("forest_count_cycle: need n >= 3");
  if (k < 1 || k > n)
    throw std::domain_error("forest_count_cycle: need 1 <= k <= n");
  BigInt c = binomial(static_cast<unsigned long>(n + k),
                      static_cast<unsigned long>(n - k)) *
             BigInt(2 * n);
  return div_exact(c, BigInt(n + k));
}

// Exhaustive rooted-forest count for any finite model: sum over acyclic edge
// subsets with exactly k components of the product of component sizes (each
// tree may be rooted at any of its vertices). Capped at 10 vertices and 24
// edges.
inline BigInt forest_count_bruteforce(const GraphModel& m, int k) {
  if (k < 1)
    throw std::invalid_argument("forest_count_bruteforce: k must be >= 1");
  const HalfEdgeGraph& g = m.graph();
  const int n = g.vertex_count();
  if (n > 10)
    throw resource_error("forest_count_bruteforce: more than 10 vertices");
  std::vector<std::pair<int, int>> edges = g.edge_list();
  const int ne = static_cast<int>(edges.size());
  if (ne > 24)
    throw resource_error("forest_count_bruteforce: more than 24 edges");
  BigInt total = 0;
  std::vector<int> parent(static_cast<size_t>(n)), size(static_cast<size_t>(n));
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x)
      x = parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  for (unsigned long mask = 0; mask < (1ul << ne); ++mask) {
    for (int i = 0; i < n; ++i) {
      parent[static_cast<size_t>(i)] = i;
      size[static_cast<size_t>(i)] = 1;
    }
    bool acyclic = true;
    int used = 0;
    for (int e = 0; e < ne && acyclic; ++e) {
      if (!(mask >> e & 1ul)) continue;
      ++used;
      int ru = find(edges[static_cast<size_t>(e)].first);
      int rv = find(edges[static_cast<size_t>(e)].second);
      if (ru == rv) {
        acyclic = false;  // includes self-loops
        break;
      }
      if (size[static_cast<size_t>(ru)] < size[static_cast<size_t>(rv)])
        std::swap(ru, rv);
      parent[static_cast<size_t>(rv)] = ru;
      size[static_cast<size_t>(ru)] += size[static_cast<size_t>(rv)];
    }
    if (!acyclic || n - used != k) continue;
    BigInt prod = 1;
    for (int v = 0; v < n; ++v)
      if (find(v) == v) prod *= size[static_cast<size_t>(v)];
    total += prod;
  }
  return total;
}

}  // namespace gzeta

#endif  // GZETA_DETERMINANT_HPP
