#pragma once

#include <functional>
#include <vector>

#include "plategap/geometry.hpp"

namespace plategap {

// Maximal gap produced by the unit-L1 load K exp(alpha*y) sin(x): the closed
// form assembled from the m=1 coefficients, with the exp(alpha*ell) growth
// cancelled analytically so any admissible alpha (up to 1e6 and beyond) is fine.
double edge_gap(const PlateGeometry& geometry, double alpha);

// Limit of edge_gap as alpha -> infinity (load concentrated on one free edge):
//   sinh^2(ell) / ( (1-sigma) [ (1-sigma) ell + (3+sigma) sinh(ell) cosh(ell) ] ).
double edge_gap_limit(const PlateGeometry& geometry);

// First-order coefficient c1 in edge_gap = limit - c1/alpha + o(1/alpha).
double first_order_correction(const PlateGeometry& geometry);

// | int_Omega f_alpha v  -  (1/2) int_0^pi sin(x) v(x,ell) dx | for a smooth
// test function v vanishing on the hinged edges; quantifies how closely the
// load approximates a line force on the upper free edge.
double weak_limit_residual(const PlateGeometry& geometry, double alpha,
                           const std::function<double(double, double)>& v);

enum class SweepSpacing { Log, Linear };

struct AlphaSweep {
    PlateGeometry geometry;
    std::vector<double> alphas;
    std::vector<bool> nudged;  // true where a grid point was moved off an integer
    std::vector<double> values;
    double limit = 0.0;  // edge_gap_limit for this geometry
};

// Evaluates edge_gap over a deterministic alpha grid.  Grid points that land
// within the integer guard are nudged by +-2*guard (recorded per point)
// instead of being rejected, so the sweep has no holes.
AlphaSweep sweep_alpha(const PlateGeometry& geometry, double alpha_min, double alpha_max,
                       int points, SweepSpacing spacing);

}  // namespace plategap
