#!/usr/bin/env python3
"""Smoke tests of the plategap python module."""

import math
import sys

import plategap as pg

FAILURES = 0


def check(name, condition, detail=""):
    global FAILURES
    print(f"[{'ok' if condition else 'FAIL'}] {name} {detail}")
    if not condition:
        FAILURES += 1


def main():
    ell = math.pi / 150.0
    g = pg.PlateGeometry(ell, 0.2)
    check("geometry properties", g.half_width == ell and g.poisson == 0.2 and g.is_narrow)

    try:
        pg.PlateGeometry(1.0, 1.5)
        check("geometry validation raises", False)
    except ValueError:
        check("geometry validation raises", True)

    check("stable_ratio identity",
          pg.stable_ratio("cosh", 1e5, "cosh", 1e5) == 1.0)
    check("stable_ratio huge arguments",
          abs(pg.stable_ratio("sinh", 1e6 + 1.0, "sinh", 1e6) - math.e) < 1e-12 * math.e)

    e_lim = pg.edge_gap_limit(g)
    check("limit gap", abs(e_lim - 6.5444105606e-3) < 1e-9, f"({e_lim:.10e})")

    e4 = pg.edge_gap(g, 1e4 + 2e-6)
    c1 = pg.first_order_correction(g)
    check("first-order asymptotics",
          abs((1e4 + 2e-6) * (e_lim - e4) - c1) < 0.01 * c1)

    try:
        pg.edge_gap(g, 5.0)
        check("integer alpha raises", False)
    except ValueError:
        check("integer alpha raises", True)

    load = pg.make_sine_load(g, 10.5)
    check("load normalization",
          abs(load.k_alpha - 10.5 / (4.0 * math.sinh(10.5 * ell))) < 1e-12)
    sol = pg.solve(g, load)
    check("hinged edge", sol.evaluate(0.0, 0.0) == 0.0)
    profile = pg.gap_profile(sol)
    check("two-path gap",
          abs(profile.g_infinity - pg.edge_gap(g, 10.5)) < 1e-11 * profile.g_infinity)

    zero_profile = pg.gap_profile(pg.solve(g, pg.make_sine_load(g, 0.0)))
    check("even load zero gap", zero_profile.g_infinity == 0.0)

    mode = pg.torsional_eigenvalue(g, 1, 1)
    check("eigenvalue fixture", abs(mode.nu - 10943.6295519336) < 1e-6,
          f"({mode.nu:.6f})")
    check("branch", mode.branch == pg.Branch.TRIG)
    check("profile odd", abs(mode.profile(ell / 3) + mode.profile(-ell / 3)) <
          1e-13 * 2 * math.sqrt(mode.nu))

    entry = pg.gap_constant(g, 1, 1)
    check("gap constant", abs(entry.c - 4.3629e-3) < 5e-4 * 4.3629e-3, f"({entry.c:.6e})")

    table = pg.gap_constant_table(g, 3, 2)
    check("table shape", len(table) == 2 and len(table[0]) == 3)
    check("table cell", abs(table[0][1].c - 1.0904e-3) < 5e-4 * 1.0904e-3)

    sweep = pg.sweep_alpha(g, 1.5, 1e5, 25, pg.SweepSpacing.LOG)
    check("sweep increasing",
          all(a < b for a, b in zip(sweep.values, sweep.values[1:])))
    check("sweep bounded", all(v < sweep.limit for v in sweep.values))

    combo = pg.combo_max_gap(g, [pg.ComboEntry(1, 1, 0.5), pg.ComboEntry(2, 1, 0.5)])
    check("combo max", abs(combo.max_gap - entry.c) < 1e-12)
    check("combo actual below max", combo.actual_gap <= combo.max_gap * (1 + 1e-12))

    gammas = pg.fourier_sine_coefficients(lambda x: math.sin(3 * x), 8)
    check("fourier of a pure mode",
          len(gammas) == 1 and gammas[0][0] == 3 and abs(gammas[0][1] - 1.0) < 1e-11)

    rep = pg.mode_residual(mode, [2 * ell / 8, 2 * ell / 16])
    check("mode residual decays", rep.interior_max[1] < rep.interior_max[0],
          f"(orders {rep.fitted_order:.2f})")

    scan = pg.bracket_scan(g, 1, 1.1, 3.0e7, 5000)
    check("bracket scan finds the first eigenvalue",
          any(lo < mode.nu < hi for lo, hi in scan))

    print(f"\n{FAILURES} failure(s)")
    return 1 if FAILURES else 0


if __name__ == "__main__":
    sys.exit(main())
