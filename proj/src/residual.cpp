#include "plategap/residual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plategap/eigenmodes.hpp"

namespace plategap {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = 3.14159265358979323846L;

// Fornberg's recursion for the weights of the order-th derivative at x0.
template <class T>
std::vector<T> fornberg(T x0, const std::vector<T>& nodes, int order) {
    const int n = static_cast<int>(nodes.size());
    std::vector<std::vector<T>> c(order + 1, std::vector<T>(n, T(0)));
    c[0][0] = T(1);
    T c1 = T(1);
    T c4 = nodes[0] - x0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, order);
        T c2 = T(1);
        const T c5 = c4;
        c4 = nodes[i] - x0;
        for (int j = 0; j < i; ++j) {
            const T c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int s = mn; s >= 1; --s)
                    c[s][i] = c1 * (T(s) * c[s - 1][i - 1] - c5 * c[s][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int s = mn; s >= 1; --s) c[s][j] = (c4 * c[s][j] - T(s) * c[s - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c[order];
}

}  // namespace

std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int order) {
    if (order < 0 || static_cast<int>(nodes.size()) < order + 1)
        throw InvalidParameterError("fd_weights: need at least order+1 nodes");
    return fornberg<double>(x0, nodes, order);
}

namespace {

std::vector<long double> offsets_l(long double origin, long double step, int count) {
    std::vector<long double> v(count);
    for (int i = 0; i < count; ++i) v[i] = origin + step * i;
    return v;
}

}  // namespace

ResidualReport biharmonic_residual(const Field2D& u, const Field2D& f,
                                   const PlateGeometry& geometry,
                                   const std::vector<double>& grid_steps) {
    if (grid_steps.empty())
        throw InvalidParameterError("biharmonic_residual: empty grid-step list");
    const long double ell = geometry.half_width();
    const long double sigma = geometry.poisson();

    ResidualReport report;
    report.bc_max["hinged_value"] = {};
    report.bc_max["hinged_moment"] = {};
    report.bc_max["free_moment"] = {};
    report.bc_max["free_shear"] = {};

    // Snap every step first; the interior maximum is then taken over the same
    // region (2*h_max inside the free edges) at every refinement level, so the
    // fitted order compares like for like.
    std::vector<long> intervals;
    long double h_max = 0.0L;
    for (double requested : grid_steps) {
        if (!(requested > 0.0))
            throw InvalidParameterError("biharmonic_residual: steps must be positive");
        const long ny = std::lround(2.0 * geometry.half_width() / requested);
        if (ny < 8)
            throw InvalidParameterError(
                "biharmonic_residual: step too coarse, need at least 8 intervals across "
                "the plate width");
        intervals.push_back(ny);
        h_max = std::max(h_max, 2.0L * ell / static_cast<long double>(ny));
    }
    const long double y_margin = 2.0L * h_max;

    for (long ny : intervals) {
        const long double h = 2.0L * ell / static_cast<long double>(ny);
        report.grid_steps.push_back(static_cast<double>(h));

        const long nx = static_cast<long>(floorl(kPiL / h));
        // Columns are subsampled (the fields are smooth); every stencil still
        // uses exact +-h, +-2h neighbors around its center.
        const long stride = std::max(1L, (nx - 3) / 129);

        auto y_of = [&](long r) { return -ell + h * static_cast<long double>(r); };

        long double interior = 0.0L;
        const long double h4 = h * h * h * h;
        for (long i = 2; i + 2 <= nx; i += stride) {
            const long double x = h * static_cast<long double>(i);
            for (long r = 2; r + 2 <= ny; ++r) {
                const long double y = y_of(r);
                if (fabsl(y) > ell - y_margin * (1.0L - 1e-12L)) continue;
                const long double lap2 =
                    (20.0L * u(x, y) -
                     8.0L * (u(x - h, y) + u(x + h, y) + u(x, y - h) + u(x, y + h)) +
                     2.0L * (u(x - h, y - h) + u(x - h, y + h) + u(x + h, y - h) +
                             u(x + h, y + h)) +
                     (u(x - 2 * h, y) + u(x + 2 * h, y) + u(x, y - 2 * h) +
                      u(x, y + 2 * h))) /
                    h4;
                interior = std::max(interior, fabsl(lap2 - f(x, y)));
            }
        }
        report.interior_max.push_back(static_cast<double>(interior));

        // 4th-order stencils: one-sided in y at the free edges, centered in x.
        const auto w_d2 = fornberg<long double>(0.0L, offsets_l(0.0L, h, 6), 2);
        const auto w_d3 = fornberg<long double>(0.0L, offsets_l(0.0L, h, 7), 3);
        const auto w_d1 = fornberg<long double>(0.0L, offsets_l(0.0L, h, 5), 1);
        const auto w_xx = fornberg<long double>(0.0L, offsets_l(-2.0L * h, h, 5), 2);

        auto uxx = [&](long double x, long double y) {
            long double acc = 0.0L;
            for (int q = 0; q < 5; ++q) acc += w_xx[q] * u(x + (q - 2) * h, y);
            return acc;
        };

        long double hinged_value = 0.0L, hinged_moment = 0.0L;
        for (long r = 0; r <= ny; ++r) {
            const long double y = y_of(r);
            hinged_value = std::max({hinged_value, fabsl(u(0.0L, y)), fabsl(u(kPiL, y))});
            long double left = 0.0L, right = 0.0L;
            for (int q = 0; q < 6; ++q) {
                left += w_d2[q] * u(q * h, y);
                right += w_d2[q] * u(kPiL - q * h, y);
            }
            hinged_moment = std::max({hinged_moment, fabsl(left), fabsl(right)});
        }

        long double free_moment = 0.0L, free_shear = 0.0L;
        for (long i = 2; i + 2 <= nx; i += stride) {
            const long double x = h * static_cast<long double>(i);
            for (int side = 0; side < 2; ++side) {
                const long double y0 = side == 0 ? ell : -ell;
                const long double dir = side == 0 ? -1.0L : 1.0L;  // into the plate

                long double u_yy = 0.0L, u_yyy = 0.0L, u_xxy = 0.0L;
                for (int q = 0; q < 7; ++q) u_yyy += w_d3[q] * u(x, y0 + dir * q * h);
                for (int q = 0; q < 6; ++q) u_yy += w_d2[q] * u(x, y0 + dir * q * h);
                for (int q = 0; q < 5; ++q) u_xxy += w_d1[q] * uxx(x, y0 + dir * q * h);
                u_yyy *= dir;
                u_xxy *= dir;

                free_moment = std::max(free_moment, fabsl(u_yy + sigma * uxx(x, y0)));
                free_shear = std::max(free_shear, fabsl(u_yyy + (2.0L - sigma) * u_xxy));
            }
        }

        report.bc_max["hinged_value"].push_back(static_cast<double>(hinged_value));
        report.bc_max["hinged_moment"].push_back(static_cast<double>(hinged_moment));
        report.bc_max["free_moment"].push_back(static_cast<double>(free_moment));
        report.bc_max["free_shear"].push_back(static_cast<double>(free_shear));
    }

    // Log-log regression of interior residual against step.
    const std::size_t n = report.grid_steps.size();
    double mx = 0.0, my = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (report.interior_max[i] <= 0.0) continue;  // exact solutions: order undefined
        mx += std::log(report.grid_steps[i]);
        my += std::log(report.interior_max[i]);
        ++used;
    }
    if (used >= 2) {
        mx /= used;
        my /= used;
        double sxx = 0.0, sxy = 0.0, ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (report.interior_max[i] <= 0.0) continue;
            const double dx = std::log(report.grid_steps[i]) - mx;
            sxy += dx * (std::log(report.interior_max[i]) - my);
            sxx += dx * dx;
        }
        report.fitted_order = sxy / sxx;
        for (std::size_t i = 0; i < n; ++i) {
            if (report.interior_max[i] <= 0.0) continue;
            const double fit = my + report.fitted_order * (std::log(report.grid_steps[i]) - mx);
            const double d = std::log(report.interior_max[i]) - fit;
            ss += d * d;
        }
        report.fit_residual = std::sqrt(ss / used);
    }
    return report;
}

std::vector<std::pair<double, double>> bracket_scan(const PlateGeometry& geometry, int m,
                                                    double lambda_lo, double lambda_hi,
                                                    int n_samples) {
    if (!(lambda_lo < lambda_hi))
        throw InvalidParameterError("bracket_scan: need lambda_lo < lambda_hi");
    if (n_samples < 2) throw InvalidParameterError("bracket_scan: need at least 2 samples");

    const double ell = geometry.half_width();
    const double m2 = static_cast<double>(m) * m;
    const double s_lo = std::sqrt(lambda_lo);
    const double s_hi = std::sqrt(lambda_hi);

    auto pole_between = [&](double sa, double sb) {
        if (sb <= m2) return false;  // poles only exist past s = m^2
        const double ta = sa > m2 ? ell * std::sqrt(sa - m2) : 0.0;
        const double tb = ell * std::sqrt(sb - m2);
        const double ka = std::ceil(ta / kPi - 0.5);
        const double kb = std::floor(tb / kPi - 0.5);
        return kb >= std::max(0.0, ka) && ta < (kb + 0.5) * kPi;
    };

    std::vector<double> s_vals(n_samples), z_vals(n_samples);
    std::vector<bool> valid(n_samples, false);
    int n_valid = 0;
    for (int i = 0; i < n_samples; ++i) {
        const double s = s_lo + (s_hi - s_lo) * i / (n_samples - 1.0);
        s_vals[i] = s;
        try {
            z_vals[i] = characteristic_residual(geometry, m, s * s);
            valid[i] = std::isfinite(z_vals[i]);
        } catch (const PoleProximityError&) {
        } catch (const InvalidParameterError&) {
        }
        if (valid[i]) ++n_valid;
    }
    if (n_valid == 0)
        throw PoleProximityError("bracket_scan: no sample point outside pole neighborhoods");

    std::vector<std::pair<double, double>> hits;
    for (int i = 0; i + 1 < n_samples; ++i) {
        if (!valid[i] || !valid[i + 1]) continue;
        if (z_vals[i] == 0.0 || (z_vals[i] > 0.0) == (z_vals[i + 1] > 0.0)) continue;
        if (pole_between(s_vals[i], s_vals[i + 1])) continue;  // tan jump, not a root
        hits.emplace_back(s_vals[i] * s_vals[i], s_vals[i + 1] * s_vals[i + 1]);
    }
    return hits;
}

}  // namespace plategap
