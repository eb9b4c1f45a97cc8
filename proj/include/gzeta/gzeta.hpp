#ifndef GZETA_GZETA_HPP
#define GZETA_GZETA_HPP

// Umbrella header: spectral zeta functions, heat functions, regularized
// determinants, and Ihara zeta functions for finite graphs and integer
// lattices.

#include "gzeta/determinant.hpp"
#include "gzeta/errors.hpp"
#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/graph_io.hpp"
#include "gzeta/ihara.hpp"
#include "gzeta/linalg.hpp"
#include "gzeta/specfun.hpp"
#include "gzeta/spectral.hpp"
#include "gzeta/zeta.hpp"

#endif  // GZETA_GZETA_HPP
