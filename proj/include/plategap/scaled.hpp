#pragma once

#include <cmath>
#include <string>

#include "plategap/errors.hpp"

namespace plategap {

// Floating value with a wide exponent: value = mantissa * exp(log_scale).
// The formulas of this library multiply quantities like exp(alpha*ell) with
// alpha*ell in the tens of thousands, far past double range; carrying the
// exponent separately keeps every intermediate finite.  |mantissa| is kept in
// [1/2, 2) for nonzero values.
class ScaledReal {
public:
    ScaledReal() = default;
    explicit ScaledReal(double v) : mantissa_(v) { normalize(); }

    static ScaledReal from_parts(double mantissa, double log_scale) {
        ScaledReal r;
        r.mantissa_ = mantissa;
        r.log_scale_ = log_scale;
        r.normalize();
        return r;
    }

    // sinh(x) = sign(x) * exp(|x|) * (1 - exp(-2|x|)) / 2, exact at x = 0.
    static ScaledReal sinh_of(double x) {
        const double ax = std::abs(x);
        double m = -std::expm1(-2.0 * ax) / 2.0;
        if (x < 0.0) m = -m;
        return from_parts(m, ax);
    }

    // cosh(x) = exp(|x|) * (1 + exp(-2|x|)) / 2.
    static ScaledReal cosh_of(double x) {
        const double ax = std::abs(x);
        return from_parts((1.0 + std::exp(-2.0 * ax)) / 2.0, ax);
    }

    static ScaledReal exp_of(double x) { return from_parts(1.0, x); }

    double mantissa() const { return mantissa_; }
    double log_scale() const { return log_scale_; }
    bool is_zero() const { return mantissa_ == 0.0; }

    // 80-bit conversion for the residual-oracle evaluation paths.
    long double to_long_double() const {
        if (mantissa_ == 0.0) return 0.0L;
        return static_cast<long double>(mantissa_) * expl(static_cast<long double>(log_scale_));
    }

    // Honest conversion: overflows to +-inf / underflows to 0 only when the
    // represented value itself is outside double range.
    double to_double() const {
        if (mantissa_ == 0.0) return 0.0;
        // Split the scale into k*ln2 + r with r small, using the usual hi/lo
        // decomposition of ln2 so the reduction does not lose bits.
        const double inv_ln2 = 1.4426950408889634074;
        const double ln2_hi = 6.93147180369123816490e-01;
        const double ln2_lo = 1.90821492927058770002e-10;
        double k = std::nearbyint(log_scale_ * inv_ln2);
        if (std::abs(k) > 1.0e9) return (k > 0) == (mantissa_ > 0) ? HUGE_VAL * mantissa_ : 0.0;
        double r = (log_scale_ - k * ln2_hi) - k * ln2_lo;
        return std::scalbn(mantissa_ * std::exp(r), static_cast<int>(k));
    }

    ScaledReal operator-() const {
        ScaledReal r = *this;
        r.mantissa_ = -r.mantissa_;
        return r;
    }

    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
        if (a.is_zero() || b.is_zero()) return ScaledReal{};
        return from_parts(a.mantissa_ * b.mantissa_, a.log_scale_ + b.log_scale_);
    }

    friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
        if (b.is_zero()) throw InvalidParameterError("ScaledReal: division by zero");
        if (a.is_zero()) return ScaledReal{};
        return from_parts(a.mantissa_ / b.mantissa_, a.log_scale_ - b.log_scale_);
    }

    friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const ScaledReal& hi = (a.log_scale_ >= b.log_scale_) ? a : b;
        const ScaledReal& lo = (a.log_scale_ >= b.log_scale_) ? b : a;
        const double d = lo.log_scale_ - hi.log_scale_;
        if (d < -80.0) return hi;  // addend below 1e-35 of the larger term
        return from_parts(hi.mantissa_ + lo.mantissa_ * std::exp(d), hi.log_scale_);
    }

    friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return a + (-b); }

    friend ScaledReal operator*(double a, const ScaledReal& b) { return ScaledReal(a) * b; }
    friend ScaledReal operator*(const ScaledReal& a, double b) { return a * ScaledReal(b); }
    friend ScaledReal operator/(const ScaledReal& a, double b) { return a / ScaledReal(b); }

private:
    void normalize() {
        if (mantissa_ == 0.0) {
            log_scale_ = 0.0;
            return;
        }
        int k = 0;
        const double f = std::frexp(mantissa_, &k);  // |f| in [1/2, 1)
        mantissa_ = 2.0 * f;                         // |mantissa_| in [1, 2)
        log_scale_ += (k - 1) * 0.69314718055994530942;
    }

    double mantissa_ = 0.0;
    double log_scale_ = 0.0;
};

enum class HyperbolicKind { Sinh, Cosh, Exp };

namespace detail {

struct MantissaScale {
    double mantissa;
    double scale;
};

inline MantissaScale factor_hyperbolic(HyperbolicKind kind, double x) {
    switch (kind) {
        case HyperbolicKind::Sinh: {
            const double ax = std::abs(x);
            double m = -std::expm1(-2.0 * ax) / 2.0;
            return {x < 0.0 ? -m : m, ax};
        }
        case HyperbolicKind::Cosh: {
            const double ax = std::abs(x);
            return {(1.0 + std::exp(-2.0 * ax)) / 2.0, ax};
        }
        case HyperbolicKind::Exp:
        default:
            return {1.0, x};
    }
}

}  // namespace detail

// Overflow-safe evaluation of kind_num(arg_num) / kind_den(arg_den).
// The exponents cancel analytically: the ratio is (mn/md) * exp(sn - sd),
// with the scale difference carried through a compensated subtraction so the
// result stays accurate even when both arguments are ~1e6.  The value itself
// may still overflow double range, in which case +-inf is returned.
inline double stable_ratio(HyperbolicKind kind_num, double arg_num,
                           HyperbolicKind kind_den, double arg_den) {
    const auto num = detail::factor_hyperbolic(kind_num, arg_num);
    const auto den = detail::factor_hyperbolic(kind_den, arg_den);
    if (den.mantissa == 0.0)
        throw InvalidParameterError("stable_ratio: denominator is exactly zero");
    if (num.mantissa == 0.0) return 0.0;

    // TwoDiff: s + e == num.scale - den.scale exactly.
    const double s = num.scale - den.scale;
    const double t = s - num.scale;
    const double e = (num.scale - (s - t)) - (den.scale + t);

    return (num.mantissa / den.mantissa) * std::exp(s) * (1.0 + e);
}

inline HyperbolicKind hyperbolic_kind_from_string(const std::string& name) {
    if (name == "sinh") return HyperbolicKind::Sinh;
    if (name == "cosh") return HyperbolicKind::Cosh;
    if (name == "exp") return HyperbolicKind::Exp;
    throw InvalidParameterError("unknown hyperbolic kind: " + name);
}

}  // namespace plategap
