#include "plategap/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plategap {

namespace {

constexpr double kPi = std::numbers::pi;

// 1/cosh(x) without overflow for any x.
double sech(double x) {
    const double e = std::exp(-std::abs(x));
    return 2.0 * e / (1.0 + e * e);
}

struct Row {
    double a0, a1;
    double norm() const { return std::hypot(a0, a1); }
};

void check_not_singular(double det, const Row& r0, const Row& r1, const char* system, int m) {
    if (std::abs(det) <= 1e-12 * r0.norm() * r1.norm())
        throw SingularSystemError(system, m,
                                  std::string("solve_mode_coefficients: near-singular ") +
                                      system + " system at m=" + std::to_string(m));
}

}  // namespace

ModeCoefficients solve_mode_coefficients(const PlateGeometry& geometry, double alpha, int m,
                                         double gamma_m) {
    if (m < 1) throw InvalidParameterError("solve_mode_coefficients: m must be >= 1");
    require_admissible_alpha(alpha);

    ModeCoefficients out;
    out.m = m;
    out.gamma = gamma_m;
    if (gamma_m == 0.0) return out;  // zero load drives the identically-zero mode

    const double sigma = geometry.poisson();
    const double ell = geometry.half_width();
    const double md = static_cast<double>(m);
    const double m2 = md * md;
    const double L = md * ell;
    const double t = std::tanh(L);
    const double sech2 = sech(L) * sech(L);
    const double al = alpha * ell;

    const double denom_mode = (m2 - alpha * alpha) * (m2 - alpha * alpha);
    out.particular = ScaledReal(gamma_m / denom_mode);

    const double q1 = gamma_m * (sigma * m2 - alpha * alpha) / denom_mode;
    const double q2 = alpha * gamma_m * ((2.0 - sigma) * m2 - alpha * alpha) / denom_mode;

    const ScaledReal cosh_al_over = ScaledReal::cosh_of(al) / ScaledReal::cosh_of(L);
    const ScaledReal sinh_al_over = ScaledReal::sinh_of(al) / ScaledReal::cosh_of(L);

    // (A,D) system, both rows divided by cosh(m*ell).
    {
        const Row r0{(1.0 - sigma) * m2, md * (2.0 + (1.0 - sigma) * L * t)};
        const Row r1{-(1.0 - sigma) * m2 * md * t,
                     m2 * ((1.0 + sigma) * t - (1.0 - sigma) * L)};
        const double det =
            (1.0 - sigma) * m2 * m2 * ((3.0 + sigma) * t - (1.0 - sigma) * L * sech2);
        check_not_singular(det, r0, r1, "(A,D)", m);

        const ScaledReal rho1 = ScaledReal(q1) * cosh_al_over;
        const ScaledReal rho2 = ScaledReal(q2) * sinh_al_over;
        out.a = (rho1 * r1.a1 - rho2 * r0.a1) / det;
        out.d = (rho2 * r0.a0 - rho1 * r1.a0) / det;
    }

    // (B,C) system, both rows divided by cosh(m*ell).
    {
        const Row r0{(1.0 - sigma) * m2 * t, md * (2.0 * t + (1.0 - sigma) * L)};
        const Row r1{-(1.0 - sigma) * m2 * md,
                     m2 * ((1.0 + sigma) - (1.0 - sigma) * L * t)};
        const double det =
            (1.0 - sigma) * m2 * m2 * ((3.0 + sigma) * t + (1.0 - sigma) * L * sech2);
        check_not_singular(det, r0, r1, "(B,C)", m);

        const ScaledReal rho1 = ScaledReal(q1) * sinh_al_over;
        const ScaledReal rho2 = ScaledReal(q2) * cosh_al_over;
        out.b = (rho1 * r1.a1 - rho2 * r0.a1) / det;
        out.c = (rho2 * r0.a0 - rho1 * r1.a0) / det;
    }
    return out;
}

namespace detail {

FirstModeHatted first_mode_hatted(const PlateGeometry& geometry, double alpha) {
    require_admissible_alpha(alpha);
    const double sigma = geometry.poisson();
    const double ell = geometry.half_width();
    const double cl = std::cosh(ell);
    const double sl = std::sinh(ell);
    const double dp = (3.0 + sigma) * cl * sl + (1.0 - sigma) * ell;
    const double dm = (3.0 + sigma) * cl * sl - (1.0 - sigma) * ell;
    const double a2 = alpha * alpha;
    const double am1sq = (a2 - 1.0) * (a2 - 1.0);

    FirstModeHatted h{};
    if (alpha == 0.0) {
        h.a_hat = sigma * ((1.0 + sigma) * sl - (1.0 - sigma) * ell * cl) / ((1.0 - sigma) * dm);
        h.b_hat = 0.0;
        h.c_hat = 0.0;
        h.d_hat = sigma * sl / dm;
        return h;
    }

    const double th = std::tanh(alpha * ell);
    const double coth = 1.0 / th;
    const double p = alpha * (a2 + sigma - 2.0);  // common odd-part factor
    const double q = sigma - a2;

    h.a_hat = ((1.0 + sigma) * q * sl - (1.0 - sigma) * q * ell * cl +
               (2.0 * p * cl + (1.0 - sigma) * p * ell * sl) * th) /
              ((1.0 - sigma) * am1sq * dm);
    h.b_hat = ((1.0 + sigma) * q * cl - (1.0 - sigma) * q * ell * sl +
               (2.0 * p * sl + (1.0 - sigma) * p * ell * cl) * coth) /
              ((1.0 - sigma) * am1sq * dp);
    h.c_hat = (alpha * (2.0 - sigma - a2) * sl * coth + q * cl) / (am1sq * dp);
    h.d_hat = (alpha * (2.0 - sigma - a2) * cl * th + q * sl) / (am1sq * dm);
    return h;
}

}  // namespace detail

ModeCoefficients first_mode_closed_form(const PlateGeometry& geometry, double alpha) {
    const auto h = detail::first_mode_hatted(geometry, alpha);
    const double al = alpha * geometry.half_width();

    ModeCoefficients out;
    out.m = 1;
    out.gamma = 1.0;
    const double a2 = alpha * alpha;
    out.particular = ScaledReal(1.0 / ((1.0 - a2) * (1.0 - a2)));
    out.a = ScaledReal(h.a_hat) * ScaledReal::cosh_of(al);
    out.b = ScaledReal(h.b_hat) * ScaledReal::sinh_of(al);
    out.c = ScaledReal(h.c_hat) * ScaledReal::sinh_of(al);
    out.d = ScaledReal(h.d_hat) * ScaledReal::cosh_of(al);
    return out;
}

double PlateSolution::evaluate(double x, double y) const {
    const double ell = geometry_.half_width();
    const double slack_x = 1e-12 * kPi;
    const double slack_y = 1e-12 * ell;
    if (x < -slack_x || x > kPi + slack_x || y < -ell - slack_y || y > ell + slack_y)
        throw std::domain_error("PlateSolution::evaluate: point outside the closed plate");
    if (x <= 0.0 || x >= kPi) return 0.0;  // hinged edges

    const double alpha = load_.alpha();
    const ScaledReal& k = load_.k_alpha();
    const ScaledReal ys(y);

    double u = 0.0;
    for (const auto& mode : modes_) {
        if (mode.gamma == 0.0) continue;
        const double my = mode.m * y;
        const ScaledReal ch = ScaledReal::cosh_of(my);
        const ScaledReal sh = ScaledReal::sinh_of(my);
        const ScaledReal term = mode.particular * ScaledReal::exp_of(alpha * y) +
                                mode.a * ch + mode.b * sh + (mode.c * ch + mode.d * sh) * ys;
        u += (k * term).to_double() * std::sin(mode.m * x);
    }
    return u;
}

long double PlateSolution::evaluate_precise(long double x, long double y) const {
    const long double pi_l = 3.14159265358979323846L;
    if (x <= 0.0L || x >= pi_l) return 0.0L;
    const long double alpha = load_.alpha();
    const long double k = load_.k_alpha().to_long_double();

    long double u = 0.0L;
    for (const auto& mode : modes_) {
        if (mode.gamma == 0.0) continue;
        const long double my = mode.m * y;
        const long double ch = coshl(my);
        const long double sh = sinhl(my);
        const long double term = mode.particular.to_long_double() * expl(alpha * y) +
                                 mode.a.to_long_double() * ch + mode.b.to_long_double() * sh +
                                 (mode.c.to_long_double() * ch + mode.d.to_long_double() * sh) * y;
        u += k * term * sinl(mode.m * x);
    }
    return u;
}

PlateSolution solve(const PlateGeometry& geometry, const LoadSpec& load) {
    std::vector<ModeCoefficients> modes;
    modes.reserve(load.gammas().size());
    for (const auto& g : load.gammas())
        modes.push_back(solve_mode_coefficients(geometry, load.alpha(), g.m, g.coefficient));
    return PlateSolution(geometry, load, std::move(modes));
}

double GapProfile::evaluate(double x) const {
    if (x <= 0.0 || x >= kPi) return 0.0;  // hinged edges
    double v = 0.0;
    for (const auto& [m, amp] : mode_amplitudes) v += amp * std::sin(m * x);
    return v;
}

GapProfile gap_profile(const PlateSolution& solution) {
    const double ell = solution.geometry().half_width();
    const double alpha = solution.load().alpha();
    const ScaledReal& k = solution.load().k_alpha();

    GapProfile profile;
    for (const auto& mode : solution.modes()) {
        // Only the y-odd terms survive u(x,ell) - u(x,-ell).
        const ScaledReal odd = 2.0 * (mode.b * ScaledReal::sinh_of(mode.m * ell) +
                                      mode.c * ell * ScaledReal::cosh_of(mode.m * ell)) +
                               mode.particular * 2.0 * ScaledReal::sinh_of(alpha * ell);
        profile.mode_amplitudes.emplace_back(mode.m, (k * odd).to_double());
    }
    profile.g_infinity = max_abs_sine_sum(profile.mode_amplitudes);
    return profile;
}

double max_abs_sine_sum(const std::vector<std::pair<int, double>>& modes) {
    bool all_zero = true;
    for (const auto& [m, amp] : modes)
        if (amp != 0.0) all_zero = false;
    if (all_zero) return 0.0;

    auto value = [&](double x) {
        double v = 0.0;
        for (const auto& [m, amp] : modes) v += amp * std::sin(m * x);
        return v;
    };
    auto slope = [&](double x) {
        double v = 0.0;
        for (const auto& [m, amp] : modes) v += amp * m * std::cos(m * x);
        return v;
    };

    const int n = 4096;
    double best = 0.0, best_x = kPi / 2.0;
    for (int i = 0; i <= n; ++i) {
        const double x = kPi * i / n;
        const double v = std::abs(value(x));
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    if (best == 0.0) return 0.0;

    const double sgn = value(best_x) > 0.0 ? 1.0 : -1.0;
    double lo = std::max(0.0, best_x - kPi / n);
    double hi = std::min(kPi, best_x + kPi / n);
    double flo = sgn * slope(lo);
    double fhi = sgn * slope(hi);
    if (flo > 0.0 && fhi < 0.0) {
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sgn * slope(mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        best = std::max(best, std::abs(value(0.5 * (lo + hi))));
    } else {
        best = std::max({best, std::abs(value(lo)), std::abs(value(hi))});
    }
    return best;
}

}  // namespace plategap
