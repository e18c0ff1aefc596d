#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "plategap/errors.hpp"

namespace plategap {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    long max_panels = 1'000'000;
};

namespace detail {

template <class F>
double adaptive_simpson_pass(F& f, double a, double b, double fa, double fm, double fb,
                             double tol, long max_panels) {
    struct Segment {
        double a, b, fa, fm, fb, s, tol;
        int depth;
    };

    auto simpson = [](double x0, double x1, double f0, double fmid, double f1) {
        return (x1 - x0) / 6.0 * (f0 + 4.0 * fmid + f1);
    };

    std::vector<Segment> stack;
    stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 0});

    double total = 0.0;
    long panels = 1;
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();

        const double m = 0.5 * (seg.a + seg.b);
        const double lm = 0.5 * (seg.a + m);
        const double rm = 0.5 * (m + seg.b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double sl = simpson(seg.a, m, seg.fa, flm, seg.fm);
        const double sr = simpson(m, seg.b, seg.fm, frm, seg.fb);
        const double delta = sl + sr - seg.s;

        // depth 48 puts the segment width below ~1e-14 of the original
        // interval; further subdivision is pure roundoff.
        if (std::abs(delta) <= 15.0 * seg.tol || seg.depth >= 48) {
            total += sl + sr + delta / 15.0;
            continue;
        }
        panels += 2;
        if (panels > max_panels)
            throw QuadratureError("integrate_adaptive: panel budget exhausted");
        stack.push_back({seg.a, m, seg.fa, flm, seg.fm, sl, seg.tol / 2.0, seg.depth + 1});
        stack.push_back({m, seg.b, seg.fm, frm, seg.fb, sr, seg.tol / 2.0, seg.depth + 1});
    }
    return total;
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a,b] with the usual one-level
// Richardson error estimate; the result error is kept near
// max(abs_tol, rel_tol*|I|).
template <class F>
double integrate_adaptive(F&& f, double a, double b, QuadratureOptions opt = {}) {
    if (!(a <= b)) throw InvalidParameterError("integrate_adaptive: requires a <= b");
    if (a == b) return 0.0;

    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));

    // Coarse composite estimate just to anchor the relative tolerance.
    double coarse = 0.0;
    {
        const int n = 32;
        const double h = (b - a) / n;
        double acc = fa + fb;
        for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
        coarse = acc * h / 3.0;
    }

    double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(coarse));
    double result = detail::adaptive_simpson_pass(f, a, b, fa, fm, fb, tol, opt.max_panels);

    // One retightening pass when cancellation made |I| much smaller than the
    // coarse anchor, so the relative tolerance is honored against the result.
    const double tol2 = std::max(opt.abs_tol, opt.rel_tol * std::abs(result));
    if (tol2 < 0.25 * tol) {
        result = detail::adaptive_simpson_pass(f, a, b, fa, fm, fb, tol2, opt.max_panels);
    }
    return result;
}

template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol, double abs_tol) {
    QuadratureOptions opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = abs_tol;
    return integrate_adaptive(std::forward<F>(f), a, b, opt);
}

}  // namespace plategap
