#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plategap/geometry.hpp"

namespace plategap {

// Fields are sampled in 80-bit precision: the 13-point stencil divides by
// h^4, so double-rounded samples would drown the O(h^2) truncation term on
// fine grids.
using Field2D = std::function<long double(long double, long double)>;

// Finite-difference weights for the k-th derivative at point x0 from arbitrary
// nodes (Fornberg's recursion).
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int order);

// Grid-refinement record of how well a candidate solution satisfies the
// plate problem: interior 13-point biharmonic residual against the load, plus
// one-sided-difference residuals of the four boundary-condition families.
struct ResidualReport {
    std::vector<double> grid_steps;
    std::vector<double> interior_max;
    std::map<std::string, std::vector<double>> bc_max;
    double fitted_order = 0.0;   // log2 slope of interior residual vs step
    double fit_residual = 0.0;   // rms deviation of that regression
};

// Evaluates u and f pointwise on uniform grids aligned so y = +-ell are
// boundary rows.  Requested steps are snapped to 2*ell/(Ny-1); a step that
// puts fewer than 8 intervals across the width is rejected.
ResidualReport biharmonic_residual(const Field2D& u, const Field2D& f,
                                   const PlateGeometry& geometry,
                                   const std::vector<double>& grid_steps);

// Brute-force sign scan of the characteristic residual over [lambda_lo,
// lambda_hi]: samples uniformly in s = sqrt(lambda), skips pole
// neighborhoods, and returns every subinterval (as a lambda pair) where the
// residual changes sign with no pole in between.  Deliberately independent of
// the fast root finder.
std::vector<std::pair<double, double>> bracket_scan(const PlateGeometry& geometry, int m,
                                                    double lambda_lo, double lambda_hi,
                                                    int n_samples);

}  // namespace plategap
