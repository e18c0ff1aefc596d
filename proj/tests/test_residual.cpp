#include <doctest.h>

#include <cmath>
#include <numbers>

#include "plategap/eigenmodes.hpp"
#include "plategap/load.hpp"
#include "plategap/residual.hpp"
#include "plategap/series.hpp"

using namespace plategap;

namespace {
constexpr double kPi = std::numbers::pi;
const PlateGeometry kRef(kPi / 150.0, 0.2);
}  // namespace

TEST_CASE("finite-difference weights against known stencils") {
    const auto d2 = fd_weights(0.0, {-1.0, 0.0, 1.0}, 2);
    CHECK(d2[0] == doctest::Approx(1.0));
    CHECK(d2[1] == doctest::Approx(-2.0));
    CHECK(d2[2] == doctest::Approx(1.0));

    const auto d1 = fd_weights(0.0, {-1.0, 0.0, 1.0}, 1);
    CHECK(d1[0] == doctest::Approx(-0.5));
    CHECK(d1[1] == doctest::Approx(0.0));
    CHECK(d1[2] == doctest::Approx(0.5));

    // One-sided 4th-order second derivative.
    const auto os2 = fd_weights(0.0, {0.0, 1.0, 2.0, 3.0, 4.0, 5.0}, 2);
    const double expected[6] = {15.0 / 4.0,  -77.0 / 6.0, 107.0 / 6.0,
                                -13.0,       61.0 / 12.0, -5.0 / 6.0};
    for (int i = 0; i < 6; ++i) CHECK(os2[i] == doctest::Approx(expected[i]).epsilon(1e-12));

    CHECK_THROWS_AS(fd_weights(0.0, {0.0, 1.0}, 2), InvalidParameterError);
}

TEST_CASE("zero solution produces exactly zero residuals") {
    Field2D z = [](long double, long double) { return 0.0L; };
    const auto rep = biharmonic_residual(z, z, kRef, {2.0 * kRef.half_width() / 16.0});
    CHECK(rep.interior_max[0] == 0.0);
    for (const auto& [family, values] : rep.bc_max) {
        CAPTURE(family);
        CHECK(values[0] == 0.0);
    }
}

TEST_CASE("series solution satisfies the plate problem to second order") {
    const double ell = kRef.half_width();
    const auto load = make_sine_load(kRef, 10.5);
    const auto solution = solve(kRef, load);
    Field2D u = [&](long double x, long double y) { return solution.evaluate_precise(x, y); };
    Field2D f = [&](long double x, long double y) { return load.evaluate_precise(x, y); };
    const auto rep =
        biharmonic_residual(u, f, kRef, {2 * ell / 8, 2 * ell / 16, 2 * ell / 32});

    CHECK(rep.fitted_order >= 1.7);
    CHECK(rep.bc_max.at("hinged_value").back() == 0.0);
    const auto& shear = rep.bc_max.at("free_shear");
    const auto& moment = rep.bc_max.at("free_moment");
    CHECK(shear.back() < shear.front());
    CHECK(moment.back() < moment.front());
}

TEST_CASE("eigenpair satisfies the eigenvalue problem to second order") {
    const double ell = kRef.half_width();
    const auto mode = torsional_eigenvalue(kRef, 1, 1);
    Field2D u = [&](long double x, long double y) {
        return mode.profile_precise(y) * sinl(x);
    };
    Field2D f = [&](long double x, long double y) {
        return static_cast<long double>(mode.nu()) * mode.profile_precise(y) * sinl(x);
    };
    const auto rep =
        biharmonic_residual(u, f, kRef, {2 * ell / 8, 2 * ell / 16, 2 * ell / 32});
    CHECK(rep.fitted_order >= 1.7);
    const auto& shear = rep.bc_max.at("free_shear");
    CHECK(shear.back() < shear.front());
}

TEST_CASE("grid coarser than eight intervals across the width is rejected") {
    Field2D z = [](long double, long double) { return 0.0L; };
    CHECK_THROWS_AS(biharmonic_residual(z, z, kRef, {kRef.half_width()}),
                    InvalidParameterError);
    CHECK_THROWS_AS(biharmonic_residual(z, z, kRef, {}), InvalidParameterError);
}

TEST_CASE("bracket scan finds exactly one sign change per eigenvalue bracket") {
    for (int m = 1; m <= 3; ++m)
        for (int j = 1; j <= 3; ++j) {
            const auto br = eigenvalue_bracket(kRef, m, j);
            const double margin = 1e-8 * (br.s_hi - br.s_lo);
            const double lo = br.s_lo + margin, hi = br.s_hi - margin;
            const auto hits = bracket_scan(kRef, m, lo * lo, hi * hi, 2000);
            CAPTURE(m);
            CAPTURE(j);
            REQUIRE(hits.size() == 1);
            const double nu = torsional_eigenvalue(kRef, m, j).nu();
            CHECK(nu > hits[0].first);
            CHECK(nu < hits[0].second);
        }
}

TEST_CASE("bracket scan on the hyperbolic range") {
    const int m = 3000;
    const double m4 = std::pow(static_cast<double>(m), 4);
    const double sigma = kRef.poisson();
    const auto hits =
        bracket_scan(kRef, m, (1.0 - sigma * sigma) * m4 * (1.0 + 1e-9), m4 * (1.0 - 1e-9),
                     4000);
    CHECK(hits.size() == 1);
}

TEST_CASE("a scan spanning several brackets skips the tangent poles") {
    // Range covering the first two brackets of m = 1: two roots, one pole.
    const auto b1 = eigenvalue_bracket(kRef, 1, 1);
    const auto b2 = eigenvalue_bracket(kRef, 1, 2);
    const double lo = b1.s_lo + 1e-6 * (b1.s_hi - b1.s_lo);
    const double hi = b2.s_hi - 1e-6 * (b2.s_hi - b2.s_lo);
    const auto hits = bracket_scan(kRef, 1, lo * lo, hi * hi, 20000);
    CHECK(hits.size() == 2);
    const double nu1 = torsional_eigenvalue(kRef, 1, 1).nu();
    const double nu2 = torsional_eigenvalue(kRef, 1, 2).nu();
    REQUIRE(hits.size() == 2);
    CHECK((nu1 > hits[0].first && nu1 < hits[0].second));
    CHECK((nu2 > hits[1].first && nu2 < hits[1].second));
}

TEST_CASE("bracket scan parameter validation") {
    CHECK_THROWS_AS(bracket_scan(kRef, 1, 10.0, 5.0, 100), InvalidParameterError);
    CHECK_THROWS_AS(bracket_scan(kRef, 1, 5.0, 10.0, 1), InvalidParameterError);
}

TEST_CASE("a scan range without a root returns an empty list") {
    // Strictly between s = m^2 and the first root: the residual stays positive.
    const double nu = torsional_eigenvalue(kRef, 1, 1).nu();
    const double s_root = std::sqrt(nu);
    const auto hits = bracket_scan(kRef, 1, 1.5 * 1.5, std::pow(0.9 * s_root, 2), 500);
    CHECK(hits.empty());
}

TEST_CASE("a scan range living entirely inside a pole neighborhood fails loudly") {
    const double ell = kRef.half_width();
    const double s_pole = 1.0 + std::pow(kPi / (2.0 * ell), 2);
    const double lo = s_pole * (1.0 - 2e-11), hi = s_pole * (1.0 + 2e-11);
    CHECK_THROWS_AS(bracket_scan(kRef, 1, lo * lo, hi * hi, 16), PoleProximityError);
}
