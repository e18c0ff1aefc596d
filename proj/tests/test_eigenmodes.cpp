#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "plategap/eigenmodes.hpp"
#include "plategap/quadrature.hpp"
#include "plategap/residual.hpp"

using namespace plategap;

namespace {

constexpr double kPi = std::numbers::pi;
const PlateGeometry kRef(kPi / 150.0, 0.2);

// Paper-reported gap constants at ell = pi/150, sigma = 0.2 (5 digits).
const double kReferenceTable[5][5] = {
    {4.3629e-3, 1.0904e-3, 4.8439e-4, 2.7229e-4, 1.7411e-4},
    {4.3566e-8, 4.3555e-8, 4.3536e-8, 4.3509e-8, 4.3474e-8},
    {4.1216e-9, 4.1214e-9, 4.1209e-9, 4.1203e-9, 4.1195e-9},
    {9.4439e-10, 9.4436e-10, 9.4432e-10, 9.4426e-10, 9.4418e-10},
    {3.2251e-10, 3.2250e-10, 3.2249e-10, 3.2248e-10, 3.2247e-10}};

}  // namespace

TEST_CASE("branch classification at the reference configuration") {
    for (int m = 1; m <= 5; ++m) CHECK(mode_branch(kRef, m) == Branch::Trig);
    CHECK(mode_branch(kRef, 3000) == Branch::Hyperbolic);

    const double s_crit = critical_branch_index(kRef);
    CHECK(s_crit == doctest::Approx(2.7e3).epsilon(0.02));
    // s_crit solves the threshold equation.
    const double q = std::pow(0.2 / 1.8, 2);
    const double u = std::numbers::sqrt2 * s_crit * kRef.half_width();
    CHECK(std::tanh(u) == doctest::Approx(q * u).epsilon(1e-10));
    // Just across the threshold the classification flips.
    CHECK(mode_branch(kRef, static_cast<int>(s_crit) - 5) == Branch::Trig);
    CHECK(mode_branch(kRef, static_cast<int>(s_crit) + 5) == Branch::Hyperbolic);
}

TEST_CASE("the branch coefficient stays below one for every poisson ratio") {
    for (double sigma : {0.01, 0.2, 0.5, 0.99}) {
        const double r = sigma / (2.0 - sigma);
        CHECK(r * r < 1.0);
    }
}

TEST_CASE("a configuration on the branch threshold is rejected with diagnostics") {
    // At sigma = 0.2 the threshold coefficient is (1/9)^2 = 1/81; with
    // ell = 81/sqrt(2) and m = 1 the inequality is an equality to ~1e-16
    // (tanh(81) == 1 in double), i.e. a genuinely degenerate configuration.
    const PlateGeometry degenerate(81.0 / std::numbers::sqrt2, 0.2);
    CHECK_THROWS_AS(mode_branch(degenerate, 1), DegenerateConfigError);
    CHECK_THROWS_AS(torsional_eigenvalue(degenerate, 1, 1), DegenerateConfigError);

    // Table generation captures the failure per cell instead of aborting.
    const auto table = gap_constant_table(degenerate, 1, 1);
    CHECK_FALSE(table.at(1, 1).entry.has_value());
    CHECK_FALSE(table.at(1, 1).error.empty());
}

TEST_CASE("characteristic residual changes sign across each bracket") {
    for (int m = 1; m <= 5; ++m)
        for (int j = 1; j <= 5; ++j) {
            const auto br = eigenvalue_bracket(kRef, m, j);
            const double margin = 1e-8 * (br.s_hi - br.s_lo);
            const double zlo =
                characteristic_residual(kRef, m, std::pow(br.s_lo + margin, 2));
            const double zhi =
                characteristic_residual(kRef, m, std::pow(br.s_hi - margin, 2));
            CAPTURE(m);
            CAPTURE(j);
            CHECK(zlo > 0.0);
            CHECK(zhi < 0.0);
        }
}

TEST_CASE("hyperbolic-branch residual changes sign across its bracket") {
    const int m = 3000;
    const auto br = eigenvalue_bracket(kRef, m, 1);
    CHECK(br.branch == Branch::Hyperbolic);
    const double margin = 1e-8 * (br.s_hi - br.s_lo);
    const double zlo = characteristic_residual(kRef, m, std::pow(br.s_lo + margin, 2));
    const double zhi = characteristic_residual(kRef, m, std::pow(br.s_hi - margin, 2));
    CHECK(zlo * zhi < 0.0);
}

TEST_CASE("residual evaluation near a tangent pole is rejected") {
    const double ell = kRef.half_width();
    const double s_pole = 1.0 + std::pow(kPi / (2.0 * ell), 2);
    CHECK_THROWS_AS(characteristic_residual(kRef, 1, s_pole * s_pole), PoleProximityError);
    CHECK_THROWS_AS(characteristic_residual(kRef, 2, 1.0), InvalidParameterError);
}

TEST_CASE("eigenvalues sit inside their brackets") {
    for (int m = 1; m <= 5; ++m)
        for (int j = 1; j <= 5; ++j) {
            const auto br = eigenvalue_bracket(kRef, m, j);
            const auto mode = torsional_eigenvalue(kRef, m, j);
            const double s = std::sqrt(mode.nu());
            CAPTURE(m);
            CAPTURE(j);
            CHECK(s > br.s_lo);
            CHECK(s < br.s_hi);
            if (br.branch == Branch::Trig)
                CHECK(mode.nu() > std::pow(static_cast<double>(m), 4));
        }
}

TEST_CASE("first eigenvalue against the frozen scan-oracle fixture") {
    const auto mode = torsional_eigenvalue(kRef, 1, 1);
    // Frozen from a 1e6-interval sign scan + plain bisection on the residual.
    CHECK(mode.nu() == doctest::Approx(10943.6295519336).epsilon(1e-12));

    // Live oracle: rescan and bisect, independent of the secant iteration.
    const auto br = eigenvalue_bracket(kRef, 1, 1);
    const double margin = 1e-8 * (br.s_hi - br.s_lo);
    const double lo = br.s_lo + margin, hi = br.s_hi - margin;
    const auto hits = bracket_scan(kRef, 1, lo * lo, hi * hi, 100000);
    REQUIRE(hits.size() == 1);
    double a = std::sqrt(hits[0].first), b = std::sqrt(hits[0].second);
    double fa = characteristic_residual(kRef, 1, a * a);
    for (int it = 0; it < 200 && (b - a) > 1e-15 * b; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = characteristic_residual(kRef, 1, mid * mid);
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    const double nu_oracle = 0.25 * (a + b) * (a + b);
    CHECK(mode.nu() == doctest::Approx(nu_oracle).epsilon(1e-12));
}

TEST_CASE("root residual is small on the bracket scale") {
    for (int m = 1; m <= 5; ++m)
        for (int j = 1; j <= 5; ++j) {
            const auto br = eigenvalue_bracket(kRef, m, j);
            const double margin = 1e-8 * (br.s_hi - br.s_lo);
            const double z_lo =
                characteristic_residual(kRef, m, std::pow(br.s_lo + margin, 2));
            const double z_hi =
                characteristic_residual(kRef, m, std::pow(br.s_hi - margin, 2));
            const double scale = std::max(std::abs(z_lo), std::abs(z_hi));
            const auto mode = torsional_eigenvalue(kRef, m, j);
            const double z_root = characteristic_residual(kRef, m, mode.nu());
            CAPTURE(m);
            CAPTURE(j);
            CHECK(std::abs(z_root) <= 1e-9 * scale);
        }
}

TEST_CASE("eigenfunction profile") {
    const auto mode = torsional_eigenvalue(kRef, 1, 1);
    const double ell = kRef.half_width();
    const double scale = 2.0 * std::sqrt(mode.nu());

    SUBCASE("odd in y, zero at the midline, normalized at the edges") {
        CHECK(mode.profile(0.0) == 0.0);
        CHECK(mode.profile(ell) == doctest::Approx(scale).epsilon(1e-12));
        CHECK(mode.profile(-ell) == doctest::Approx(-scale).epsilon(1e-12));
        for (int i = 1; i <= 64; ++i) {
            const double y = ell * i / 64.0;
            CHECK(std::abs(mode.profile(y) + mode.profile(-y)) <= 1e-13 * scale);
        }
    }
    SUBCASE("domain check") {
        CHECK_THROWS_AS(mode.profile(1.5 * ell), std::domain_error);
    }
    SUBCASE("nodal structure of the higher cross-section families") {
        for (int j : {2, 3}) {
            const auto higher = torsional_eigenvalue(kRef, 1, j);
            int sign_changes = 0;
            double prev = higher.profile(ell / 512.0);
            for (int i = 2; i <= 512; ++i) {
                const double v = higher.profile(ell * i / 512.0);
                if (prev != 0.0 && v != 0.0 && (v > 0.0) != (prev > 0.0)) ++sign_changes;
                prev = v;
            }
            CHECK(sign_changes == j - 1);
        }
    }
}

TEST_CASE("L1 norms") {
    const auto mode = torsional_eigenvalue(kRef, 1, 1);
    const double ell = kRef.half_width();

    SUBCASE("sign-definite first family: int |v| equals |int v|") {
        const double signed_half = integrate_adaptive(
            [&](double y) { return mode.profile(y); }, 0.0, ell, 1e-12, 1e-15);
        CHECK(mode_l1_norm(mode) ==
              doctest::Approx(4.0 * std::abs(signed_half)).epsilon(1e-11));
    }
    SUBCASE("norm backs out the reference gap constant") {
        const double l1 = mode_l1_norm(mode);
        CHECK(l1 ==
              doctest::Approx(4.0 / (std::sqrt(mode.nu()) * 4.3629e-3)).epsilon(5e-4));
    }
    SUBCASE("oscillating profile against a dense fixed-grid composite rule") {
        // Independent of the adaptive quadrature and of the zero-splitting:
        // plain composite Simpson of |v| on 2^19 uniform panels.  |v| has a
        // kink at its interior zero, so the composite rule converges slowly
        // but surely; 1e-6 relative is well within its reach at this n.
        const auto m12 = torsional_eigenvalue(kRef, 1, 2);
        const int n = 1 << 19;
        const double h = ell / n;
        long double acc = std::abs(m12.profile(0.0)) + std::abs(m12.profile(ell));
        for (int i = 1; i < n; ++i)
            acc += (i % 2 ? 4.0L : 2.0L) * std::abs(m12.profile(i * h));
        const double dense = static_cast<double>(acc) * h / 3.0;
        CHECK(mode_l1_norm(m12) == doctest::Approx(4.0 * dense).epsilon(1e-6));
    }
}

TEST_CASE("gap constants reproduce the reference values") {
    CHECK(gap_constant(kRef, 1, 1).c == doctest::Approx(4.3629e-3).epsilon(5e-4));
    CHECK(gap_constant(kRef, 2, 1).c == doctest::Approx(1.0904e-3).epsilon(5e-4));
    CHECK(gap_constant(kRef, 1, 2).c == doctest::Approx(4.3566e-8).epsilon(5e-4));
}

TEST_CASE("gap constants stay finite and decreasing across the branch transition") {
    // m = 2700 is Trig, m = 2770 and 3000 Hyperbolic (critical index ~2735);
    // large Trig m exercises the pole-adjacent j=1 bracket endpoint.
    const auto c_trig = gap_constant(kRef, 2700, 1);
    const auto c_hyp1 = gap_constant(kRef, 2770, 1);
    const auto c_hyp2 = gap_constant(kRef, 3000, 1);
    CHECK(c_trig.c > c_hyp1.c);
    CHECK(c_hyp1.c > c_hyp2.c);
    CHECK(c_hyp2.c > 0.0);
    const double m4 = std::pow(3000.0, 4);
    CHECK(c_hyp2.nu > (1.0 - 0.04) * m4);
    CHECK(c_hyp2.nu < m4);
}

TEST_CASE("full table: reference values, monotonicity, and the (5.7)-style identity") {
    const auto table = gap_constant_table(kRef, 5, 5);
    for (int j = 1; j <= 5; ++j)
        for (int m = 1; m <= 5; ++m) {
            const auto& cell = table.at(m, j);
            REQUIRE(cell.entry);
            CAPTURE(m);
            CAPTURE(j);
            CHECK(cell.entry->c ==
                  doctest::Approx(kReferenceTable[j - 1][m - 1]).epsilon(5e-4));
            CHECK(cell.entry->c * std::sqrt(cell.entry->nu) * cell.entry->l1_norm ==
                  doctest::Approx(4.0).epsilon(1e-12));
        }
    // Monotonicity in each direction, at this configuration.
    for (int j = 1; j <= 5; ++j)
        for (int m = 1; m < 5; ++m)
            CHECK(table.at(m, j).entry->c >= table.at(m + 1, j).entry->c);
    for (int m = 1; m <= 5; ++m)
        for (int j = 1; j < 5; ++j)
            CHECK(table.at(m, j).entry->c >= table.at(m, j + 1).entry->c);
    // The (1,1) entry dominates the table.
    for (int j = 1; j <= 5; ++j)
        for (int m = 1; m <= 5; ++m)
            CHECK(table.at(1, 1).entry->c >= table.at(m, j).entry->c);
}

TEST_CASE("scaling study") {
    const std::vector<double> grid{kPi / 50, kPi / 100, kPi / 200, kPi / 400, kPi / 800};
    SUBCASE("reference ratio value") {
        const double ell = kPi / 150.0;
        CHECK(gap_constant(kRef, 1, 1).c / (ell * ell * ell) ==
              doctest::Approx(474.9).epsilon(1e-3));
    }
    SUBCASE("cubic law for the second cross-section family") {
        const auto study = gap_scaling_study(0.2, 1, 2, grid);
        CHECK(study.fitted_slope == doctest::Approx(3.0).epsilon(0.067));
        for (const auto& p : study.points) CHECK(p.ratio > 0.0);
    }
    SUBCASE("ratios stay positive for the first family") {
        const auto study = gap_scaling_study(0.2, 1, 1, grid);
        for (const auto& p : study.points) CHECK(p.ratio > 0.0);
    }
    SUBCASE("grid validation") {
        CHECK_THROWS_AS(gap_scaling_study(0.2, 1, 1, {kPi / 10.0, kPi / 50.0}),
                        InvalidParameterError);
        CHECK_THROWS_AS(gap_scaling_study(0.2, 1, 1, {kPi / 50.0}), InvalidParameterError);
    }
}

TEST_CASE("combination maximizer") {
    SUBCASE("single mode") {
        const auto result = combo_max_gap(kRef, {{1, 1, 1.0}});
        CHECK(result.max_gap == doctest::Approx(4.3629e-3).epsilon(5e-4));
        CHECK(result.actual_gap == doctest::Approx(result.max_gap).epsilon(1e-12));
        REQUIRE(result.argmax.size() == 1);
        CHECK(result.argmax[0].m == 1);
        CHECK(result.argmax[0].weight == 1.0);
    }
    SUBCASE("mass moves to the smallest mode index") {
        const auto result = combo_max_gap(kRef, {{3, 1, 0.5}, {2, 1, 0.25}});
        CHECK(result.max_gap == doctest::Approx(1.0904e-3).epsilon(5e-4));
        CHECK(result.argmax[0].m == 2);
    }
    SUBCASE("equal weights stay below the theoretical maximum") {
        const auto result = combo_max_gap(kRef, {{1, 1, 0.5}, {2, 1, 0.5}});
        const double c11 = gap_constant(kRef, 1, 1).c;
        const double c21 = gap_constant(kRef, 2, 1).c;
        CHECK(result.actual_gap <= 0.5 * c11 + 0.5 * c21 + 1e-15);
        CHECK(result.max_gap == doctest::Approx(c11).epsilon(1e-12));
    }
    SUBCASE("spec validation") {
        CHECK_THROWS_AS(combo_max_gap(kRef, {}), InvalidParameterError);
        CHECK_THROWS_AS(combo_max_gap(kRef, {{1, 1, 0.8}, {2, 1, 0.4}}),
                        InvalidParameterError);
        CHECK_THROWS_AS(combo_max_gap(kRef, {{1, 1, 0.5}, {1, 1, 0.3}}),
                        InvalidParameterError);
        CHECK_THROWS_AS(combo_max_gap(kRef, {{1, 1, 0.0}}), InvalidParameterError);
        // Increasing gap constants along m (j(1)=2 makes C(1) tiny) are rejected.
        CHECK_THROWS_AS(combo_max_gap(kRef, {{1, 2, 0.5}, {2, 1, 0.5}}),
                        InvalidParameterError);
    }
}
