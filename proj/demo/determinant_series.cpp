// Large-x expansion of det*(x + Delta) on the line lattice: the coefficients
// are signed Catalan numbers. Also shows cycle forest counts, which are the
// characteristic polynomial coefficients.
#include <cstdio>

#include "gzeta/gzeta.hpp"

int main() {
  using namespace gzeta;
  LaurentSeries s = regdet_series(build_lattice(1), 10);
  std::printf("det*(x + Delta) on zd:1, degrees 1..-9:\n");
  for (const auto& [deg, c] : s.coefficients)
    std::printf("  x^%-3d  %s\n", deg, to_string(c).c_str());
  std::printf("\nrooted forest counts of cycle:6 (k trees):\n");
  for (int k = 1; k <= 6; ++k)
    std::printf("  k=%d  %s\n", k, to_string(forest_count_cycle(6, k)).c_str());
  return 0;
}
