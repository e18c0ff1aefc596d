#pragma once

#include <utility>
#include <vector>

#include "plategap/load.hpp"

namespace plategap {

// Per-mode coefficients of the series solution
//   [ gamma_m e^{alpha y} / (m^2-alpha^2)^2
//     + A cosh(my) + B sinh(my) + C y cosh(my) + D y sinh(my) ] sin(mx),
// the whole series carrying the load normalization K as an outer factor.
// Values are stored scaled because A..D grow like exp(alpha*ell).
struct ModeCoefficients {
    int m = 0;
    double gamma = 0.0;
    ScaledReal particular;  // gamma_m / (m^2 - alpha^2)^2
    ScaledReal a, b, c, d;
};

// Solves the two 2x2 boundary-condition systems for mode m by closed-form
// elimination.  Rows are rescaled by cosh(m*ell) so every matrix entry is a
// bounded tanh expression; the right-hand sides keep their exp(alpha*ell)
// growth inside ScaledReal.
ModeCoefficients solve_mode_coefficients(const PlateGeometry& geometry, double alpha, int m,
                                         double gamma_m);

namespace detail {

// The m=1 coefficients divided by their hyperbolic growth:
//   a_hat = A/cosh(alpha*ell), b_hat = B/sinh(alpha*ell),
//   c_hat = C/sinh(alpha*ell), d_hat = D/cosh(alpha*ell),
// all plain doubles, finite for every admissible alpha >= 0.
struct FirstModeHatted {
    double a_hat, b_hat, c_hat, d_hat;
};

FirstModeHatted first_mode_hatted(const PlateGeometry& geometry, double alpha);

}  // namespace detail

// Explicit closed forms of the m=1, gamma_1=1 coefficients (independent of
// the generic 2x2 elimination; used as its cross-check).
ModeCoefficients first_mode_closed_form(const PlateGeometry& geometry, double alpha);

class PlateSolution {
public:
    PlateSolution(PlateGeometry geometry, LoadSpec load, std::vector<ModeCoefficients> modes)
        : geometry_(std::move(geometry)), load_(std::move(load)), modes_(std::move(modes)) {}

    const PlateGeometry& geometry() const { return geometry_; }
    const LoadSpec& load() const { return load_; }
    const std::vector<ModeCoefficients>& modes() const { return modes_; }

    // Displacement at (x,y); throws std::domain_error outside the closed
    // rectangle.  Identically zero on the hinged edges x = 0, pi.
    double evaluate(double x, double y) const;

    // 80-bit evaluation of the same closed form (for the finite-difference
    // residual oracle, whose stencils amplify rounding by 1/h^4).
    long double evaluate_precise(long double x, long double y) const;

private:
    PlateGeometry geometry_;
    LoadSpec load_;
    std::vector<ModeCoefficients> modes_;
};

PlateSolution solve(const PlateGeometry& geometry, const LoadSpec& load);

// Edge-to-edge displacement difference u(x,ell) - u(x,-ell) as a sine series,
// together with its maximum absolute value over [0,pi].
struct GapProfile {
    std::vector<std::pair<int, double>> mode_amplitudes;
    double g_infinity = 0.0;

    double evaluate(double x) const;
};

GapProfile gap_profile(const PlateSolution& solution);

// max over [0,pi] of |sum amp sin(mx)|: dense sampling (4096 panels) followed
// by derivative-sign bisection around the best sample.
double max_abs_sine_sum(const std::vector<std::pair<int, double>>& modes);

}  // namespace plategap
