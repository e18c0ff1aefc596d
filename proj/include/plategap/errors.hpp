#pragma once

#include <stdexcept>
#include <string>

namespace plategap {

// Bad constructor/operation parameters (geometry, tolerances, ranges).
class InvalidParameterError : public std::invalid_argument {
public:
    explicit InvalidParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// alpha too close to a positive integer: the per-mode amplitude 1/(m^2-alpha^2)^2
// blows up past what 64-bit arithmetic can represent accurately.
class NearIntegerAlphaError : public InvalidParameterError {
public:
    explicit NearIntegerAlphaError(const std::string& what) : InvalidParameterError(what) {}
};

// A 2x2 coefficient system came out numerically singular.  Carries which
// system ((A,D) or (B,C)) and which mode index for diagnosis.
class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(const std::string& system, int mode, const std::string& what)
        : std::runtime_error(what), system_(system), mode_(mode) {}
    const std::string& system() const noexcept { return system_; }
    int mode() const noexcept { return mode_; }

private:
    std::string system_;
    int mode_;
};

// Geometry sits on (or numerically at) the branch-threshold equality where the
// eigenfunction formulas degenerate.
class DegenerateConfigError : public std::runtime_error {
public:
    explicit DegenerateConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Characteristic function evaluated too close to a tangent pole.
class PoleProximityError : public std::runtime_error {
public:
    explicit PoleProximityError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature ran out of its panel budget.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plategap
