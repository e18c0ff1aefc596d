#pragma once

#include <functional>
#include <vector>

#include "plategap/geometry.hpp"
#include "plategap/scaled.hpp"

namespace plategap {

struct FourierMode {
    int m;
    double coefficient;
};

// Sine coefficients (2/pi) * int_0^pi g(x) sin(mx) dx for m = 1..m_max,
// computed by adaptive quadrature to absolute tolerance 1e-12.  Entries with
// |coefficient| < 1e-14 are dropped (they drive identically-zero modes).
std::vector<FourierMode> fourier_sine_coefficients(const std::function<double(double)>& g,
                                                   int m_max);

// Transverse load K * exp(alpha*y) * g(x) with g held as a finite sine series
// and K chosen so the load has unit L1 norm over the plate.
class LoadSpec {
public:
    LoadSpec(const PlateGeometry& geometry, double alpha, std::vector<FourierMode> gammas,
             double l1_g);

    double alpha() const { return alpha_; }
    const std::vector<FourierMode>& gammas() const { return gammas_; }
    double l1_g() const { return l1_g_; }

    // Normalization constant; exact even when exp(alpha*ell) overflows double.
    const ScaledReal& k_alpha() const { return k_alpha_; }
    double k_alpha_value() const { return k_alpha_.to_double(); }

    // Pointwise load value K * exp(alpha*y) * sum gamma_m sin(mx).
    double evaluate(double x, double y) const;
    long double evaluate_precise(long double x, long double y) const;

private:
    double alpha_;
    std::vector<FourierMode> gammas_;
    double l1_g_;
    ScaledReal k_alpha_;
};

// Guard distance from positive integers: below it the 1/(m^2-alpha^2)^2
// amplitudes exceed ~1e12 and 64-bit evaluation degrades.
inline constexpr double kAlphaGuard = 1e-6;

// True when alpha >= 0 and farther than the guard from every positive integer.
bool alpha_is_admissible(double alpha);

// Throws NearIntegerAlphaError / InvalidParameterError when inadmissible.
void require_admissible_alpha(double alpha);

// Build a load from explicit sine coefficients.  The L1 norm of g is computed
// from the series by adaptive quadrature.
LoadSpec make_load(const PlateGeometry& geometry, double alpha, std::vector<FourierMode> gammas);

// Build a load from a pointwise profile g on (0,pi); g is expanded in sine
// modes up to m_max first (hard cap 1024).
LoadSpec make_load(const PlateGeometry& geometry, double alpha,
                   const std::function<double(double)>& g, int m_max = 1024);

// The focal single-mode load K * exp(alpha*y) * sin(x) (unit L1 norm).
LoadSpec make_sine_load(const PlateGeometry& geometry, double alpha);

}  // namespace plategap
