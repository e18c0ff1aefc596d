#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plategap/geometry.hpp"

namespace plategap {

// Profile family of the first torsional mode for a given m.  For small m the
// cross-section mixes a sinh and a sine term (Trig); past a critical index it
// is purely hyperbolic.
enum class Branch { Trig, Hyperbolic };

// Direct evaluation of the branch inequality
//   tanh(sqrt(2) m ell)  vs  (sigma/(2-sigma))^2 sqrt(2) m ell.
// Equality within 1e-12 relative is rejected as a degenerate configuration.
Branch mode_branch(const PlateGeometry& geometry, int m);

// The positive s at which the branch inequality turns into equality, found by
// bisection; modes with m beyond it are Hyperbolic.
double critical_branch_index(const PlateGeometry& geometry);

// Root bracket for the j-th torsional eigenvalue, in s = sqrt(lambda).
struct EigenBracket {
    double s_lo, s_hi;
    Branch branch;
};

EigenBracket eigenvalue_bracket(const PlateGeometry& geometry, int m, int j);

// Signed residual of the characteristic equation at lambda, in the bounded
// normalization Z(s), s = sqrt(lambda):
//   Z(s) = ((s+c)/(s-c))^2 tanh(ell*sqrt(s+m^2))/sqrt(s+m^2)
//          - tan(ell*sqrt(s-m^2))/sqrt(s-m^2),       c = (1-sigma) m^2,
// with the tan replaced by tanh below s = m^2.  Eigenvalues are its zeros.
// Throws PoleProximityError within 1e-10 relative of a tangent pole.
double characteristic_residual(const PlateGeometry& geometry, int m, double lambda);

class TorsionalMode {
public:
    TorsionalMode(PlateGeometry geometry, int m, int j, double nu, Branch branch);

    const PlateGeometry& geometry() const { return geometry_; }
    int m() const { return m_; }
    int j() const { return j_; }
    double nu() const { return nu_; }
    Branch branch() const { return branch_; }

    // Cross-section profile v(y): odd in y, v(+-ell) = +-2 sqrt(nu).
    double profile(double y) const;

    // 80-bit evaluation for the finite-difference residual oracle.
    long double profile_precise(long double y) const;

private:
    PlateGeometry geometry_;
    int m_, j_;
    double nu_;
    Branch branch_;
    double s_;       // sqrt(nu)
    double a_;       // sqrt(s + m^2)
    double b_;       // sqrt(|s - m^2|)
    double sin_lb_;  // sin(ell*b) for the Trig branch
};

// Bracketed hybrid root-finding (bisection-safeguarded secant) on the
// characteristic residual, relative tolerance 1e-13 on lambda.
TorsionalMode torsional_eigenvalue(const PlateGeometry& geometry, int m, int j);

// L1 norm of the full eigenfunction v(y) sin(mx) over the plate:
// 2 * int_{-ell}^{ell} |v|, the |v| integral split at the interior zeros of v
// located by sign scan + bisection, each piece integrated adaptively.
double mode_l1_norm(const TorsionalMode& mode);

struct EigenGapEntry {
    int m = 0, j = 0;
    double nu = 0.0;
    double l1_norm = 0.0;
    double c = 0.0;  // 4 / (sqrt(nu) * l1_norm): the maximal gap under the resonant load
};

EigenGapEntry gap_constant(const PlateGeometry& geometry, int m, int j);

struct GapTableCell {
    std::optional<EigenGapEntry> entry;
    std::string error;  // nonempty when the cell failed
};

struct GapTable {
    int m_max = 0, j_max = 0;
    std::vector<std::vector<GapTableCell>> cells;  // cells[j-1][m-1]

    const GapTableCell& at(int m, int j) const { return cells[j - 1][m - 1]; }
};

// Full matrix of gap constants, computed independently per cell; per-cell
// failures are captured instead of aborting the table.
GapTable gap_constant_table(const PlateGeometry& geometry, int m_max, int j_max);

struct ScalingPoint {
    double ell;
    double c_value;
    double ratio;  // c_value / ell^3
};

struct ScalingStudy {
    std::vector<ScalingPoint> points;
    double fitted_slope = 0.0;     // log-log regression slope of c vs ell
    double fit_residual = 0.0;     // rms deviation of the fit
};

// Gap constant of mode (m,j) across a grid of half-widths at fixed sigma.
// The grid must lie in (0, pi/20].
ScalingStudy gap_scaling_study(double sigma, int m, int j, const std::vector<double>& ell_grid);

struct ComboEntry {
    int m = 0;
    int j = 0;
    double weight = 0.0;
};

struct ComboResult {
    double max_gap = 0.0;               // best achievable over admissible weights
    std::vector<ComboEntry> argmax;     // weights achieving it (all mass on min m)
    double actual_gap = 0.0;            // gap of the weights actually supplied
    std::vector<EigenGapEntry> entries; // per-mode constants, sorted by m
};

// Gap maximization over loads sum_m weight_m f_{m,j(m)} with sum |weight| <= 1.
// Requires distinct m, nonzero weights, and (validated numerically) that the
// gap constants are nonincreasing along the supplied (m, j(m)) choices.
ComboResult combo_max_gap(const PlateGeometry& geometry, const std::vector<ComboEntry>& spec);

}  // namespace plategap
