#include "plategap/load.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plategap/quadrature.hpp"

namespace plategap {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDropThreshold = 1e-14;
}  // namespace

std::vector<FourierMode> fourier_sine_coefficients(const std::function<double(double)>& g,
                                                   int m_max) {
    if (m_max < 1) throw InvalidParameterError("fourier_sine_coefficients: m_max must be >= 1");
    std::vector<FourierMode> modes;
    for (int m = 1; m <= m_max; ++m) {
        auto integrand = [&](double x) { return g(x) * std::sin(m * x); };
        const double gamma =
            (2.0 / kPi) * integrate_adaptive(integrand, 0.0, kPi, 1e-12, 1e-12 * kPi / 2.0);
        if (std::abs(gamma) >= kDropThreshold) modes.push_back({m, gamma});
    }
    return modes;
}

bool alpha_is_admissible(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) return false;
    const double nearest = std::round(alpha);
    if (nearest >= 1.0 && std::abs(alpha - nearest) <= kAlphaGuard) return false;
    return true;
}

void require_admissible_alpha(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw InvalidParameterError("alpha must be finite and nonnegative");
    if (!alpha_is_admissible(alpha))
        throw NearIntegerAlphaError(
            "alpha must not be an integer (within 1e-6): the 1/(m^2-alpha^2)^2 mode "
            "amplitude is singular there");
}

LoadSpec::LoadSpec(const PlateGeometry& geometry, double alpha, std::vector<FourierMode> gammas,
                   double l1_g)
    : alpha_(alpha), gammas_(std::move(gammas)), l1_g_(l1_g) {
    require_admissible_alpha(alpha);
    if (!(l1_g > 0.0)) throw InvalidParameterError("LoadSpec: |g| must have positive L1 norm");
    const double ell = geometry.half_width();
    if (alpha_ == 0.0) {
        // Continuous limit of alpha / (2 sinh(alpha*ell)): 1/(2*ell).
        k_alpha_ = ScaledReal(1.0 / (2.0 * ell * l1_g_));
    } else {
        k_alpha_ = ScaledReal(alpha_ / (2.0 * l1_g_)) / ScaledReal::sinh_of(alpha_ * ell);
    }
}

double LoadSpec::evaluate(double x, double y) const {
    double gx = 0.0;
    for (const auto& mode : gammas_) gx += mode.coefficient * std::sin(mode.m * x);
    return (k_alpha_ * ScaledReal::exp_of(alpha_ * y)).to_double() * gx;
}

long double LoadSpec::evaluate_precise(long double x, long double y) const {
    long double gx = 0.0L;
    for (const auto& mode : gammas_)
        gx += static_cast<long double>(mode.coefficient) * sinl(mode.m * x);
    const long double k = k_alpha_.to_long_double();
    return k * expl(static_cast<long double>(alpha_) * y) * gx;
}

namespace {

double series_l1_norm(const std::vector<FourierMode>& gammas) {
    if (gammas.empty()) return 0.0;
    auto g = [&](double x) {
        double v = 0.0;
        for (const auto& mode : gammas) v += mode.coefficient * std::sin(mode.m * x);
        return std::abs(v);
    };
    return integrate_adaptive(g, 0.0, kPi, 1e-12, 1e-13);
}

}  // namespace

LoadSpec make_load(const PlateGeometry& geometry, double alpha, std::vector<FourierMode> gammas) {
    require_admissible_alpha(alpha);
    if (gammas.empty()) throw InvalidParameterError("make_load: empty coefficient list");
    for (const auto& mode : gammas)
        if (mode.m < 1) throw InvalidParameterError("make_load: mode indices must be >= 1");
    const double l1 = series_l1_norm(gammas);
    return LoadSpec(geometry, alpha, std::move(gammas), l1);
}

LoadSpec make_load(const PlateGeometry& geometry, double alpha,
                   const std::function<double(double)>& g, int m_max) {
    require_admissible_alpha(alpha);
    auto gammas = fourier_sine_coefficients(g, std::min(m_max, 1024));
    if (gammas.empty())
        throw InvalidParameterError("make_load: profile has no sine content above 1e-14");
    const double l1 = integrate_adaptive([&](double x) { return std::abs(g(x)); }, 0.0, kPi,
                                         1e-12, 1e-13);
    return LoadSpec(geometry, alpha, std::move(gammas), l1);
}

LoadSpec make_sine_load(const PlateGeometry& geometry, double alpha) {
    // int_0^pi |sin| = 2 exactly.
    return LoadSpec(geometry, alpha, {{1, 1.0}}, 2.0);
}

}  // namespace plategap
