// Ihara zeta tests: cycle closed form 1/(1-u^n)^2, eigenvalue-product oracle
// on regular graphs, the regularized (per-root) variant and its functional
// equation under u -> 1/((d-1)u), and the exact invariance of the induced
// spectral variable.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "gzeta/graph_io.hpp"
#include "gzeta/ihara.hpp"

using namespace gzeta;
using Catch::Approx;

TEST_CASE("ihara zeta of cycles has the closed form", "[ihara]") {
  // On a cycle of length n the only primitive cycles are the two
  // orientations of the loop itself: Z(u) = 1/(1-u^n)^2.
  CHECK(ihara_zeta_finite(build_cycle(3), 0.3).real() ==
        Approx(1.0 / ((1 - 0.027) * (1 - 0.027))).epsilon(1e-9));
  for (int n = 3; n <= 8; ++n) {
    for (double u : {0.2, 0.4}) {
      std::complex<double> z = ihara_zeta_finite(build_cycle(n), u);
      double factor = 1.0 - std::pow(u, n);
      CHECK(std::abs(z * factor * factor - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("ihara zeta at the origin is one", "[ihara]") {
  for (int n = 3; n <= 6; ++n) {
    std::complex<double> z = ihara_zeta_finite(build_cycle(n), 0.0);
    CHECK(z.real() == Approx(1.0).epsilon(1e-14));
    CHECK(z.imag() == Approx(0.0).margin(1e-14));
  }
}

TEST_CASE("ihara zeta at complex arguments", "[ihara]") {
  std::complex<double> u(0.3, 0.1);
  for (int n = 3; n <= 5; ++n) {
    std::complex<double> z = ihara_zeta_finite(build_cycle(n), u);
    std::complex<double> factor = 1.0 - std::pow(u, n);
    CHECK(std::abs(z * factor * factor - 1.0) <= 1e-9);
  }
}

TEST_CASE("ihara zeta against an eigenvalue-product oracle", "[ihara]") {
  // For a d-regular graph on n vertices with adjacency eigenvalues a_i:
  // 1/Z(u) = (1-u^2)^{n(d-2)/2} prod_i (1 + (d-1)u^2 - u a_i).
  // Complete graph on 4 vertices: adjacency eigenvalues 3, -1, -1, -1.
  std::istringstream k4(
      R"({"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  GraphModel m = load_graph_json(k4);
  double u = 0.1;
  double uu = 1.0 + 2.0 * u * u;
  double recip =
      std::pow(1.0 - u * u, 2.0) * (uu - 3.0 * u) * std::pow(uu + u, 3.0);
  std::complex<double> z = ihara_zeta_finite(m, u);
  CHECK(z.real() == Approx(1.0 / recip).epsilon(1e-9));
  CHECK(z.imag() == Approx(0.0).margin(1e-12));
}

TEST_CASE("ihara zeta requires a regular graph", "[ihara]") {
  std::istringstream path(R"({"vertices": 3, "edges": [[0,1],[1,2]]})");
  GraphModel m = load_graph_json(path);
  CHECK_THROWS_AS(ihara_zeta_finite(m, 0.2), std::domain_error);
  CHECK_THROWS_AS(regularized_ihara(m, 0.5), std::domain_error);
}

TEST_CASE("ihara zeta pole at u = 1", "[ihara]") {
  CHECK_THROWS_AS(ihara_zeta_finite(build_cycle(4), 1.0), pole_error);
}

TEST_CASE("regularized ihara zeta on the line lattice", "[ihara]") {
  // Tree-like below u = 1 (no cycles through the root), 1/u^2 beyond.
  for (int i = 1; i <= 19; ++i) {
    double u = i / 20.0;
    CHECK(regularized_ihara(build_lattice(1), u) ==
          Approx(1.0).epsilon(1e-12));
  }
  CHECK(regularized_ihara(build_lattice(1), 0.5) == Approx(1.0).epsilon(1e-12));
  for (double u : {1.5, 2.0, 3.0})
    CHECK(regularized_ihara(build_lattice(1), u) ==
          Approx(u * u).epsilon(1e-12));
  CHECK(regularized_ihara(build_lattice(1), 2.0) == Approx(4.0).epsilon(1e-12));
}

TEST_CASE("regularized ihara zeta is the per-root factor", "[ihara]") {
  // On vertex-transitive graphs (Z*)^n recovers the global zeta.
  for (int n = 3; n <= 8; ++n) {
    GraphModel c = build_cycle(n);
    for (double u : {0.2, 0.3}) {
      double zs = regularized_ihara(c, u);
      std::complex<double> z = ihara_zeta_finite(c, u);
      CHECK(std::abs(std::pow(zs, n) - z) <= 1e-9 * std::abs(z));
    }
  }
  CHECK(regularized_ihara(build_cycle(5), 0.3) ==
        Approx(std::pow(1.0 / ((1 - std::pow(0.3, 5)) *
                               (1 - std::pow(0.3, 5))),
                        0.2))
            .epsilon(1e-12));
}

TEST_CASE("regularized ihara zeta domain", "[ihara]") {
  CHECK_THROWS_AS(regularized_ihara(build_lattice(1), 0.0), std::domain_error);
  CHECK_THROWS_AS(regularized_ihara(build_lattice(1), 1.0), std::domain_error);
  CHECK_THROWS_AS(regularized_ihara(build_lattice(1), -0.5),
                  std::domain_error);
  CHECK_THROWS_AS(regularized_ihara(build_lattice(2), 0.5), unsupported_error);
  // The induced spectral variable must stay positive: for the complete graph
  // on 4 vertices at u = 1/2, x_u = (1 - 2)(3/2 - 1) < 0 ... pick a point
  // where it vanishes or goes negative.
  std::istringstream k4(
      R"({"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  GraphModel m = load_graph_json(k4);
  CHECK_THROWS_AS(regularized_ihara(m, 0.5), std::domain_error);
}

TEST_CASE("spectral variable is invariant under the functional involution",
          "[ihara]") {
  // x_u = (1 - 1/u)(u(d-1) - 1) satisfies x_{1/((d-1)u)} = x_u exactly.
  for (int d : {2, 3, 4}) {
    std::mt19937 rng(911 + d);
    std::uniform_int_distribution<int> num(1, 40), den(1, 40);
    for (int trial = 0; trial < 50; ++trial) {
      BigRat u(num(rng), den(rng));
      u.canonicalize();
      if (u == 1) continue;
      if ((d - 1) * u == 1) continue;
      BigRat mirror = BigRat(1) / (BigRat(d - 1) * u);
      CHECK(ihara_x_map(u, d) == ihara_x_map(mirror, d));
    }
  }
}

TEST_CASE("functional equation for the regularized zeta", "[ihara]") {
  CHECK(check_ihara_functional(build_lattice(1), 0.5));
  CHECK(check_ihara_functional(build_lattice(1), 3.0));
  CHECK(check_ihara_functional(build_lattice(1), 2.0));
  CHECK(check_ihara_functional(build_cycle(6), 0.4));
  CHECK(check_ihara_functional(build_cycle(3), 0.2));
  CHECK(check_ihara_functional(build_cycle(5), 0.3));
}
