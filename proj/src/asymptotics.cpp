#include "plategap/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "plategap/load.hpp"
#include "plategap/quadrature.hpp"
#include "plategap/scaled.hpp"
#include "plategap/series.hpp"

namespace plategap {

namespace {
constexpr double kPi = std::numbers::pi;
}

double edge_gap(const PlateGeometry& geometry, double alpha) {
    require_admissible_alpha(alpha);
    if (alpha == 0.0) return 0.0;  // y-even load, zero gap
    const double ell = geometry.half_width();
    const auto h = detail::first_mode_hatted(geometry, alpha);
    const double a2 = alpha * alpha;
    return alpha / (2.0 * (1.0 - a2) * (1.0 - a2)) +
           0.5 * alpha * (h.b_hat * std::sinh(ell) + h.c_hat * ell * std::cosh(ell));
}

double edge_gap_limit(const PlateGeometry& geometry) {
    const double sigma = geometry.poisson();
    const double ell = geometry.half_width();
    const double sl = std::sinh(ell);
    return sl * sl /
           ((1.0 - sigma) * ((1.0 - sigma) * ell + (3.0 + sigma) * sl * std::cosh(ell)));
}

double first_order_correction(const PlateGeometry& geometry) {
    const double sigma = geometry.poisson();
    const double ell = geometry.half_width();
    const double cs = std::cosh(ell) * std::sinh(ell);
    return ((1.0 + sigma) * cs + (1.0 - sigma) * ell) /
           (2.0 * (1.0 - sigma) * ((3.0 + sigma) * cs + (1.0 - sigma) * ell));
}

double weak_limit_residual(const PlateGeometry& geometry, double alpha,
                           const std::function<double(double, double)>& v) {
    require_admissible_alpha(alpha);
    if (alpha <= 0.0)
        throw InvalidParameterError("weak_limit_residual: alpha must be positive");
    const double ell = geometry.half_width();

    auto load_density = [&](double y) {
        // alpha * exp(alpha*y) / (4 sinh(alpha*ell)), overflow-safe.
        return 0.25 * alpha *
               stable_ratio(HyperbolicKind::Exp, alpha * y, HyperbolicKind::Sinh, alpha * ell);
    };

    auto inner = [&](double x) {
        const double sx = std::sin(x);
        return integrate_adaptive([&](double y) { return load_density(y) * v(x, y); }, -ell,
                                  ell, 1e-10, 1e-14) *
               sx;
    };
    const double lhs = integrate_adaptive(inner, 0.0, kPi, 1e-10, 1e-13);
    const double rhs =
        0.5 * integrate_adaptive([&](double x) { return std::sin(x) * v(x, ell); }, 0.0, kPi,
                                 1e-12, 1e-14);
    return std::abs(lhs - rhs);
}

AlphaSweep sweep_alpha(const PlateGeometry& geometry, double alpha_min, double alpha_max,
                       int points, SweepSpacing spacing) {
    if (!(alpha_min > 0.0) || !(alpha_max >= alpha_min))
        throw InvalidParameterError("sweep_alpha: need 0 < alpha_min <= alpha_max");
    if (points < 1) throw InvalidParameterError("sweep_alpha: points must be >= 1");

    AlphaSweep sweep{geometry, {}, {}, {}, edge_gap_limit(geometry)};
    sweep.alphas.reserve(points);
    for (int i = 0; i < points; ++i) {
        double a;
        if (points == 1) {
            a = alpha_min;
        } else if (spacing == SweepSpacing::Log) {
            const double f = static_cast<double>(i) / (points - 1);
            a = std::exp(std::log(alpha_min) + f * (std::log(alpha_max) - std::log(alpha_min)));
        } else {
            const double f = static_cast<double>(i) / (points - 1);
            a = alpha_min + f * (alpha_max - alpha_min);
        }
        bool nudged = false;
        const double nearest = std::round(a);
        if (nearest >= 1.0 && std::abs(a - nearest) <= kAlphaGuard) {
            a = nearest + ((a >= nearest) ? 2.0 * kAlphaGuard : -2.0 * kAlphaGuard);
            nudged = true;
        }
        sweep.alphas.push_back(a);
        sweep.nudged.push_back(nudged);
        sweep.values.push_back(edge_gap(geometry, a));
    }
    return sweep;
}

}  // namespace plategap
