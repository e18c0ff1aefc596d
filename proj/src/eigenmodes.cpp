#include "plategap/eigenmodes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plategap/quadrature.hpp"
#include "plategap/scaled.hpp"
#include "plategap/series.hpp"

namespace plategap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGuard = 1e-10;    // relative s-distance kept from tan poles
constexpr double kBracketShrink = 1e-8; // relative margin off bracket endpoints

double branch_coefficient(double sigma) {
    const double r = sigma / (2.0 - sigma);
    return r * r;
}

// tan(theta)/b and tanh(theta)/b with the removable b -> 0 limit ell.
double tan_over(double ell, double b) {
    const double theta = ell * b;
    if (std::abs(theta) < 1e-8) return ell * (1.0 + theta * theta / 3.0);
    return std::tan(theta) / b;
}

double tanh_over(double ell, double b) {
    const double theta = ell * b;
    if (std::abs(theta) < 1e-8) return ell * (1.0 - theta * theta / 3.0);
    return std::tanh(theta) / b;
}

}  // namespace

Branch mode_branch(const PlateGeometry& geometry, int m) {
    if (m < 1) throw InvalidParameterError("mode_branch: m must be >= 1");
    const double x = std::numbers::sqrt2 * m * geometry.half_width();
    const double lhs = std::tanh(x);
    const double rhs = branch_coefficient(geometry.poisson()) * x;
    if (std::abs(lhs - rhs) <= 1e-12 * std::max(lhs, std::abs(rhs)))
        throw DegenerateConfigError(
            "mode_branch: configuration sits on the branch threshold at m=" +
            std::to_string(m));
    return lhs > rhs ? Branch::Trig : Branch::Hyperbolic;
}

double critical_branch_index(const PlateGeometry& geometry) {
    const double q = branch_coefficient(geometry.poisson());
    const double ell = geometry.half_width();
    // tanh(u) - q*u: positive near 0 (q < 1), negative past u = 1/q.
    auto g = [&](double u) { return std::tanh(u) - q * u; };
    double lo = 1e-12, hi = 1.0 / q + 1.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi) / (std::numbers::sqrt2 * ell);
}

EigenBracket eigenvalue_bracket(const PlateGeometry& geometry, int m, int j) {
    if (m < 1 || j < 1) throw InvalidParameterError("eigenvalue_bracket: m, j must be >= 1");
    const double md = static_cast<double>(m);
    const double m2 = md * md;
    const double ell = geometry.half_width();
    const double k = kPi / ell;

    if (j == 1 && mode_branch(geometry, m) == Branch::Hyperbolic) {
        const double sigma = geometry.poisson();
        return {std::sqrt(1.0 - sigma * sigma) * m2, m2, Branch::Hyperbolic};
    }
    const double lo = m2 + k * k * (j - 1.0) * (j - 1.0);
    const double hi = m2 + k * k * (j - 0.5) * (j - 0.5);
    return {lo, hi, Branch::Trig};
}

double characteristic_residual(const PlateGeometry& geometry, int m, double lambda) {
    if (m < 1) throw InvalidParameterError("characteristic_residual: m must be >= 1");
    const double sigma = geometry.poisson();
    const double ell = geometry.half_width();
    const double md = static_cast<double>(m);
    const double m2 = md * md;
    const double c = (1.0 - sigma) * m2;

    if (!(lambda > (1.0 - sigma * sigma) * m2 * m2))
        throw InvalidParameterError(
            "characteristic_residual: lambda below the admissible floor (1-sigma^2) m^4 "
            "for m=" +
            std::to_string(m));
    const double s = std::sqrt(lambda);
    const double a = std::sqrt(s + m2);
    const double ratio = (s + c) / (s - c);
    const double even_part = ratio * ratio * tanh_over(ell, a);

    if (s >= m2) {
        const double b = std::sqrt(s - m2);
        const double theta = ell * b;
        // nearest pole of tan: theta = (k+1/2) pi, k >= 0
        const double kpole = std::max(0.0, std::round(theta / kPi - 0.5));
        const double theta_pole = (kpole + 0.5) * kPi;
        const double s_pole = m2 + (theta_pole / ell) * (theta_pole / ell);
        if (std::abs(s - s_pole) < kPoleGuard * s)
            throw PoleProximityError(
                "characteristic_residual: lambda within the guarded tan-pole neighborhood");
        return even_part - tan_over(ell, b);
    }
    const double tau = std::sqrt(m2 - s);
    return even_part - tanh_over(ell, tau);
}

TorsionalMode::TorsionalMode(PlateGeometry geometry, int m, int j, double nu, Branch branch)
    : geometry_(std::move(geometry)), m_(m), j_(j), nu_(nu), branch_(branch) {
    const double m2 = static_cast<double>(m_) * m_;
    s_ = std::sqrt(nu_);
    a_ = std::sqrt(s_ + m2);
    b_ = std::sqrt(std::abs(s_ - m2));
    sin_lb_ = 0.0;
    if (branch_ == Branch::Trig) {
        const double theta = geometry_.half_width() * b_;
        const double frac = theta / kPi;
        if (std::abs(frac - std::round(frac)) < 1e-9)
            throw DegenerateConfigError(
                "TorsionalMode: sine denominator numerically vanishes (ell*sqrt(s-m^2) "
                "at an integer multiple of pi)");
        sin_lb_ = std::sin(theta);
    }
}

double TorsionalMode::profile(double y) const {
    const double ell = geometry_.half_width();
    if (std::abs(y) > ell * (1.0 + 1e-12))
        throw std::domain_error("TorsionalMode::profile: |y| exceeds the half-width");
    const double sigma = geometry_.poisson();
    const double m2 = static_cast<double>(m_) * m_;
    const double c = (1.0 - sigma) * m2;

    const double sinh_part =
        (s_ - c) * stable_ratio(HyperbolicKind::Sinh, y * a_, HyperbolicKind::Sinh, ell * a_);
    if (branch_ == Branch::Trig)
        return sinh_part + (s_ + c) * std::sin(y * b_) / sin_lb_;
    return sinh_part +
           (s_ + c) * stable_ratio(HyperbolicKind::Sinh, y * b_, HyperbolicKind::Sinh, ell * b_);
}

namespace {

// sinh(num)/sinh(den) in 80-bit without forming overflowing exponentials.
long double sinh_ratio_l(long double num, long double den) {
    const long double an = fabsl(num), ad = fabsl(den);
    long double r = expl(an - ad) * (-expm1l(-2.0L * an)) / (-expm1l(-2.0L * ad));
    if ((num < 0.0L) != (den < 0.0L)) r = -r;
    return r;
}

}  // namespace

long double TorsionalMode::profile_precise(long double y) const {
    const long double ell = geometry_.half_width();
    const long double sigma = geometry_.poisson();
    const long double m2 = static_cast<long double>(m_) * m_;
    const long double c = (1.0L - sigma) * m2;
    const long double s = s_;
    const long double a = sqrtl(s + m2);

    const long double sinh_part = (s - c) * sinh_ratio_l(y * a, ell * a);
    if (branch_ == Branch::Trig) {
        const long double b = sqrtl(s - m2);
        return sinh_part + (s + c) * sinl(y * b) / sinl(ell * b);
    }
    const long double b = sqrtl(m2 - s);
    return sinh_part + (s + c) * sinh_ratio_l(y * b, ell * b);
}

TorsionalMode torsional_eigenvalue(const PlateGeometry& geometry, int m, int j) {
    const EigenBracket bracket = eigenvalue_bracket(geometry, m, j);
    // Shrink by a 1e-8 relative margin off each endpoint (the Trig bracket's
    // right endpoint is itself a tan pole, and the residual guards a 1e-10
    // relative pole neighborhood, so the margin must scale with s, not just
    // with the bracket width); cap it so the bracket never collapses.
    const double width = bracket.s_hi - bracket.s_lo;
    auto margin_at = [&](double s) {
        return std::min(std::max(kBracketShrink * width, kBracketShrink * s), 0.45 * width);
    };
    double lo = bracket.s_lo + margin_at(bracket.s_lo);
    double hi = bracket.s_hi - margin_at(bracket.s_hi);

    auto zfun = [&](double s) { return characteristic_residual(geometry, m, s * s); };
    double flo = zfun(lo);
    double fhi = zfun(hi);
    if (!(flo == 0.0 || fhi == 0.0) && (flo > 0.0) == (fhi > 0.0))
        throw DegenerateConfigError(
            "torsional_eigenvalue: no sign change inside the bracket for (m,j)=(" +
            std::to_string(m) + "," + std::to_string(j) + ")");

    // Bisection-safeguarded secant; every third step bisects so the bracket
    // provably collapses.  Relative tolerance 1e-13 on lambda = 5e-14 on s.
    double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
    for (int it = 0; it < 200 && (hi - lo) > 5e-14 * hi; ++it) {
        double x = 0.5 * (lo + hi);
        if (it % 3 != 2 && f1 != f0 && std::isfinite(f0) && std::isfinite(f1)) {
            const double xs = x1 - f1 * (x1 - x0) / (f1 - f0);
            const double w = hi - lo;
            if (xs > lo + 1e-3 * w && xs < hi - 1e-3 * w) x = xs;
        }
        const double fx = zfun(x);
        if (fx == 0.0) {
            lo = hi = x;
            break;
        }
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        x0 = x1;
        f0 = f1;
        x1 = x;
        f1 = fx;
    }
    const double s_root = 0.5 * (lo + hi);
    return TorsionalMode(geometry, m, j, s_root * s_root, bracket.branch);
}

double mode_l1_norm(const TorsionalMode& mode) {
    const double ell = mode.geometry().half_width();

    // Locate interior zeros of v on (0, ell) by sign scan, then bisection.
    const int n = 64 * mode.j();
    std::vector<double> cuts{0.0};
    double y_prev = 0.0;
    double v_prev = 0.0;  // v(0) = 0 by parity
    for (int i = 1; i <= n; ++i) {
        const double y = ell * i / n;
        const double v = mode.profile(y);
        if (v_prev != 0.0 && v != 0.0 && (v > 0.0) != (v_prev > 0.0)) {
            double a = y_prev, b = y, fa = v_prev;
            for (int it = 0; it < 80 && (b - a) > 1e-15 * ell; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = mode.profile(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fm > 0.0) == (fa > 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            cuts.push_back(0.5 * (a + b));
        }
        if (v != 0.0) v_prev = v;
        y_prev = y;
    }
    cuts.push_back(ell);

    const double scale = std::abs(2.0 * std::sqrt(mode.nu()));  // |v(ell)|
    double half_integral = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        half_integral += integrate_adaptive(
            [&](double y) { return std::abs(mode.profile(y)); }, cuts[i], cuts[i + 1], 1e-11,
            1e-18 * scale * ell);
    }
    // ||v sin(mx)||_L1 = 2 * int_{-ell}^{ell} |v| and |v| is even.
    return 4.0 * half_integral;
}

EigenGapEntry gap_constant(const PlateGeometry& geometry, int m, int j) {
    const TorsionalMode mode = torsional_eigenvalue(geometry, m, j);
    const double l1 = mode_l1_norm(mode);
    EigenGapEntry entry;
    entry.m = m;
    entry.j = j;
    entry.nu = mode.nu();
    entry.l1_norm = l1;
    entry.c = 4.0 / (std::sqrt(mode.nu()) * l1);
    return entry;
}

GapTable gap_constant_table(const PlateGeometry& geometry, int m_max, int j_max) {
    if (m_max < 1 || j_max < 1)
        throw InvalidParameterError("gap_constant_table: m_max, j_max must be >= 1");
    GapTable table;
    table.m_max = m_max;
    table.j_max = j_max;
    table.cells.resize(j_max);
    for (int j = 1; j <= j_max; ++j) {
        table.cells[j - 1].resize(m_max);
        for (int m = 1; m <= m_max; ++m) {
            GapTableCell& cell = table.cells[j - 1][m - 1];
            try {
                cell.entry = gap_constant(geometry, m, j);
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
        }
    }
    return table;
}

ScalingStudy gap_scaling_study(double sigma, int m, int j, const std::vector<double>& ell_grid) {
    if (ell_grid.size() < 2)
        throw InvalidParameterError("gap_scaling_study: need at least two half-widths");
    for (double ell : ell_grid)
        if (!(ell > 0.0 && ell <= kPi / 20.0))
            throw InvalidParameterError("gap_scaling_study: half-widths must lie in (0, pi/20]");

    ScalingStudy study;
    for (double ell : ell_grid) {
        const PlateGeometry geometry(ell, sigma);
        const auto entry = gap_constant(geometry, m, j);
        study.points.push_back({ell, entry.c, entry.c / (ell * ell * ell)});
    }

    double mx = 0.0, my = 0.0;
    for (const auto& p : study.points) {
        mx += std::log(p.ell);
        my += std::log(p.c_value);
    }
    mx /= study.points.size();
    my /= study.points.size();
    double sxx = 0.0, sxy = 0.0;
    for (const auto& p : study.points) {
        const double dx = std::log(p.ell) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(p.c_value) - my);
    }
    study.fitted_slope = sxy / sxx;
    double ss = 0.0;
    for (const auto& p : study.points) {
        const double fit = my + study.fitted_slope * (std::log(p.ell) - mx);
        const double d = std::log(p.c_value) - fit;
        ss += d * d;
    }
    study.fit_residual = std::sqrt(ss / study.points.size());
    return study;
}

ComboResult combo_max_gap(const PlateGeometry& geometry, const std::vector<ComboEntry>& spec) {
    if (spec.empty()) throw InvalidParameterError("combo_max_gap: empty mode set");
    double weight_sum = 0.0;
    for (const auto& e : spec) {
        if (e.m < 1 || e.j < 1)
            throw InvalidParameterError("combo_max_gap: mode indices must be >= 1");
        if (e.weight == 0.0)
            throw InvalidParameterError("combo_max_gap: weights must be nonzero");
        weight_sum += std::abs(e.weight);
    }
    if (weight_sum > 1.0 + 1e-12)
        throw InvalidParameterError("combo_max_gap: |weight| sum exceeds 1");

    std::vector<ComboEntry> sorted = spec;
    std::sort(sorted.begin(), sorted.end(),
              [](const ComboEntry& a, const ComboEntry& b) { return a.m < b.m; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i].m == sorted[i + 1].m)
            throw InvalidParameterError("combo_max_gap: mode indices m must be distinct");

    ComboResult result;
    for (const auto& e : sorted) result.entries.push_back(gap_constant(geometry, e.m, e.j));
    for (std::size_t i = 0; i + 1 < result.entries.size(); ++i) {
        if (result.entries[i].c < result.entries[i + 1].c * (1.0 - 1e-12))
            throw InvalidParameterError(
                "combo_max_gap: gap constants must be nonincreasing along the chosen modes");
    }

    result.max_gap = result.entries.front().c;
    result.argmax = {{sorted.front().m, sorted.front().j, 1.0}};

    std::vector<std::pair<int, double>> amplitudes;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        amplitudes.emplace_back(sorted[i].m, sorted[i].weight * result.entries[i].c);
    result.actual_gap = max_abs_sine_sum(amplitudes);
    return result;
}

}  // namespace plategap
