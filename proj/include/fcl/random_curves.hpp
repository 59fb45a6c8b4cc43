#ifndef FCL_RANDOM_CURVES_HPP
#define FCL_RANDOM_CURVES_HPP

#include "fcl/curve.hpp"

#include <random>

namespace fcl {

// Valid (1,0) curves with rational vertices over odd prime denominators, so
// coincidences between independent curves are rare.

// Graph of a piecewise-linear function of x.
PLCurve random_graph_curve(std::mt19937_64& rng, int max_vertices = 5);

// Polygon allowed to move backwards in x; resampled until simple.
PLCurve random_general_curve(std::mt19937_64& rng, int max_vertices = 7);

}  // namespace fcl

#endif  // FCL_RANDOM_CURVES_HPP
