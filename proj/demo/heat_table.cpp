// Prints heat-function values for a cycle, the line lattice, and the plane
// lattice on a shared t-grid.
#include <cstdio>

#include "gzeta/gzeta.hpp"

int main() {
  using namespace gzeta;
  GraphModel c6 = build_cycle(6);
  GraphModel z1 = build_lattice(1);
  GraphModel z2 = build_lattice(2);
  std::printf("%8s %18s %18s %18s\n", "t", "cycle:6", "zd:1", "zd:2");
  for (double t = 0.0; t <= 5.0; t += 0.5)
    std::printf("%8.2f %18.12f %18.12f %18.12f\n", t, heat_function(c6, t),
                heat_function(z1, t), heat_function(z2, t));
  return 0;
}
