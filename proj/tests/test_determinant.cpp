// Determinant tests: regularized determinant closed forms against eigenvalue
// products, exact Laurent coefficients (signed Catalan numbers), truncation
// quality, characteristic polynomials (closed form vs Faddeev-LeVerrier vs
// numeric eigenvalue products), and forest counts vs brute force.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "gzeta/determinant.hpp"
#include "gzeta/graph_io.hpp"

using namespace gzeta;
using Catch::Approx;

TEST_CASE("regularized determinant closed form on the line lattice",
          "[determinant]") {
  CHECK(regdet(build_lattice(1), 5.0) ==
        Approx(3.5 + std::sqrt(45.0) / 2.0).epsilon(1e-12));
  CHECK(regdet(build_lattice(1), 1.0) ==
        Approx(1.5 + std::sqrt(5.0) / 2.0).epsilon(1e-12));
  // Asymptotically x + 2.
  double x = 1e8;
  CHECK(regdet(build_lattice(1), x) / x == Approx(1.0).epsilon(1e-6));
  CHECK(regdet(build_lattice(1), x) - x == Approx(2.0).epsilon(1e-6));
}

TEST_CASE("regularized determinant of finite graphs is the weighted product",
          "[determinant]") {
  // Vertex-transitive: det*(x + Delta)^n = det(x + Delta).
  for (int n = 3; n <= 6; ++n) {
    GraphModel c = build_cycle(n);
    IntPolynomial p = charpoly_exact(c);
    for (double x : {1.0, 2.5}) {
      double direct = p.evaluate(x);
      CHECK(std::pow(regdet(c, x), n) == Approx(direct).epsilon(1e-9));
    }
  }
  // Triangle at x = 1: (1 * 4 * 4)^{1/3}.
  CHECK(regdet(build_cycle(3), 1.0) ==
        Approx(std::cbrt(16.0)).epsilon(1e-12));
}

TEST_CASE("regularized determinant domain", "[determinant]") {
  CHECK_THROWS_AS(regdet(build_lattice(1), 0.0), std::domain_error);
  CHECK_THROWS_AS(regdet(build_cycle(3), -1.0), std::domain_error);
  CHECK_THROWS_AS(regdet(build_lattice(2), 1.0), unsupported_error);
}

TEST_CASE("laurent expansion of the line-lattice determinant",
          "[determinant]") {
  LaurentSeries s = regdet_series(build_lattice(1), 6);
  CHECK(s.coefficient(1) == BigRat(1));
  CHECK(s.coefficient(0) == BigRat(2));
  CHECK(s.coefficient(-1) == BigRat(-1));
  CHECK(s.coefficient(-2) == BigRat(2));
  CHECK(s.coefficient(-3) == BigRat(-5));
  CHECK(s.coefficient(-4) == BigRat(14));
  CHECK(s.coefficient(-5) == BigRat(-42));
  CHECK(s.min_degree() == -5);
}

TEST_CASE("laurent coefficients are signed catalan numbers", "[determinant]") {
  LaurentSeries s = regdet_series(build_lattice(1), 16);
  for (int n = 1; n <= 15; ++n) {
    BigRat want(catalan(static_cast<unsigned long>(n)));
    if (n % 2 == 1) want = -want;
    CHECK(s.coefficient(-n) == want);
  }
}

TEST_CASE("laurent constant term is the root degree", "[determinant]") {
  CHECK(regdet_series(build_lattice(2), 4).coefficient(0) == BigRat(4));
  CHECK(regdet_series(build_lattice(3), 4).coefficient(0) == BigRat(6));
  CHECK(regdet_series(build_cycle(5), 4).coefficient(0) == BigRat(2));
}

TEST_CASE("truncated series approximates the closed form", "[determinant]") {
  LaurentSeries s = regdet_series(build_lattice(1), 16);
  for (double x : {8.0, 16.0, 32.0}) {
    double err = std::fabs(regdet(build_lattice(1), x) - s.evaluate(x));
    CHECK(err <= 10.0 * std::pow(4.0 / x, 15));
  }
}

TEST_CASE("cycle series agree with the lattice series up to the girth window",
          "[determinant]") {
  // A cycle of length n is (n-1)-similar to the line lattice, so the
  // expansions share all coefficients down to degree -(n-2) and first differ
  // at -(n-1).
  for (int n = 3; n <= 8; ++n) {
    LaurentSeries cyc = regdet_series(build_cycle(n), n + 1);
    LaurentSeries lat = regdet_series(build_lattice(1), n + 1);
    for (int deg = 1; deg >= -(n - 2); --deg)
      CHECK(cyc.coefficient(deg) == lat.coefficient(deg));
    CHECK(cyc.coefficient(-(n - 1)) != lat.coefficient(-(n - 1)));
  }
}

TEST_CASE("characteristic polynomial of small cycles", "[determinant]") {
  IntPolynomial p3 = charpoly_cycle(3);
  REQUIRE(p3.coefficients.size() == 4);
  CHECK(p3.coefficients[0] == 0);
  CHECK(p3.coefficients[1] == 9);
  CHECK(p3.coefficients[2] == 6);
  CHECK(p3.coefficients[3] == 1);
  IntPolynomial p4 = charpoly_cycle(4);
  REQUIRE(p4.coefficients.size() == 5);
  CHECK(p4.coefficients[0] == 0);
  CHECK(p4.coefficients[1] == 16);
  CHECK(p4.coefficients[2] == 20);
  CHECK(p4.coefficients[3] == 8);
  CHECK(p4.coefficients[4] == 1);
}

TEST_CASE("characteristic polynomial invariants", "[determinant]") {
  for (int n = 3; n <= 30; ++n) {
    IntPolynomial p = charpoly_cycle(n);
    CHECK(p.degree() == n);
    CHECK(p.coefficients[0] == 0);                            // det(Delta) = 0
    CHECK(p.coefficients[static_cast<size_t>(n)] == 1);       // monic
    CHECK(p.coefficients[static_cast<size_t>(n) - 1] == 2 * n);  // trace
    for (const BigInt& c : p.coefficients) CHECK(c >= 0);
  }
}

TEST_CASE("closed form equals faddeev-leverrier", "[determinant]") {
  for (int n = 3; n <= 12; ++n) {
    IntPolynomial a = charpoly_cycle(n);
    IntPolynomial b = charpoly_exact(build_cycle(n));
    REQUIRE(a.coefficients.size() == b.coefficients.size());
    for (size_t i = 0; i < a.coefficients.size(); ++i)
      CHECK(a.coefficients[i] == b.coefficients[i]);
  }
}

TEST_CASE("faddeev-leverrier on non-cycles", "[determinant]") {
  GraphModel edge =
      GraphModel::finite(HalfEdgeGraph::from_edges(2, {{0, 1}}), 0, true);
  IntPolynomial p = charpoly_exact(edge);
  REQUIRE(p.coefficients.size() == 3);
  CHECK(p.coefficients[0] == 0);  // x^2 + 2x
  CHECK(p.coefficients[1] == 2);
  CHECK(p.coefficients[2] == 1);
  std::istringstream k4(
      R"({"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  IntPolynomial q = charpoly_exact(load_graph_json(k4));
  // det(x + Delta) of the complete graph on 4 vertices: x (x + 4)^3.
  CHECK(q.coefficients[0] == 0);
  CHECK(q.coefficients[1] == 64);
  CHECK(q.coefficients[2] == 48);
  CHECK(q.coefficients[3] == 12);
  CHECK(q.coefficients[4] == 1);
}

TEST_CASE("characteristic polynomial matches the eigenvalue product",
          "[determinant]") {
  for (int n = 3; n <= 12; ++n) {
    double prod = 1.0;
    for (int k = 0; k < n; ++k) {
      double s = std::sin(kPi * k / n);
      prod *= 1.0 + 4.0 * s * s;
    }
    double got = charpoly_cycle(n).evaluate(1.0);
    CHECK(std::fabs(got - prod) <= 1e-6 * prod);
  }
}

TEST_CASE("charpoly size cap", "[determinant]") {
  CHECK_THROWS_AS(charpoly_exact(build_cycle(65)), resource_error);
  CHECK_NOTHROW(charpoly_exact(build_cycle(20)));
}

TEST_CASE("forest counts on cycles", "[determinant]") {
  CHECK(forest_count_cycle(3, 1) == 9);
  CHECK(forest_count_cycle(3, 2) == 6);
  CHECK(forest_count_cycle(3, 3) == 1);
  CHECK(forest_count_cycle(4, 2) == 20);
  for (int n = 3; n <= 30; ++n) CHECK(forest_count_cycle(n, n) == 1);
  CHECK_THROWS_AS(forest_count_cycle(5, 0), std::domain_error);
  CHECK_THROWS_AS(forest_count_cycle(5, 6), std::domain_error);
}

TEST_CASE("forest counts are the charpoly coefficients", "[determinant]") {
  for (int n = 3; n <= 12; ++n) {
    IntPolynomial p = charpoly_cycle(n);
    for (int k = 1; k <= n; ++k)
      CHECK(forest_count_cycle(n, k) == p.coefficients[static_cast<size_t>(k)]);
  }
}

TEST_CASE("forest counts match brute force", "[determinant]") {
  for (int n = 3; n <= 7; ++n) {
    GraphModel c = build_cycle(n);
    for (int k = 1; k <= n; ++k)
      CHECK(forest_count_bruteforce(c, k) == forest_count_cycle(n, k));
  }
}

TEST_CASE("brute force forest counts on other graphs", "[determinant]") {
  GraphModel edge =
      GraphModel::finite(HalfEdgeGraph::from_edges(2, {{0, 1}}), 0, true);
  CHECK(forest_count_bruteforce(edge, 1) == 2);
  CHECK(forest_count_bruteforce(edge, 2) == 1);
  // Against Faddeev-LeVerrier coefficients.
  std::istringstream k4(
      R"({"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  GraphModel m = load_graph_json(k4);
  IntPolynomial p = charpoly_exact(m);
  for (int k = 1; k <= 4; ++k)
    CHECK(forest_count_bruteforce(m, k) ==
          p.coefficients[static_cast<size_t>(k)]);
  // Self-loops never enter a forest.
  std::istringstream loopy(R"({"vertices": 2, "edges": [[0,1],[1,1]]})");
  GraphModel lm = load_graph_json(loopy);
  CHECK(forest_count_bruteforce(lm, 1) == 2);
  CHECK(forest_count_bruteforce(lm, 2) == 1);
}

TEST_CASE("forest sum rule", "[determinant]") {
  // Sum over k of R_n(k) = det(1 + Delta).
  for (int n = 3; n <= 30; ++n) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) total += forest_count_cycle(n, k);
    CHECK(total == charpoly_cycle(n).evaluate(BigInt(1)));
  }
}

TEST_CASE("brute force size cap", "[determinant]") {
  CHECK_THROWS_AS(forest_count_bruteforce(build_cycle(11), 1), resource_error);
  CHECK_THROWS_AS(forest_count_bruteforce(build_cycle(12), 1), resource_error);
}
