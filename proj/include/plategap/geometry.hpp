#pragma once

#include <numbers>

#include "plategap/errors.hpp"

namespace plategap {

// Rectangular plate (0,pi) x (-half_width, half_width): the two short edges
// are hinged, the two long edges free.  Lengths are in units where the hinged
// span is exactly pi.
class PlateGeometry {
public:
    PlateGeometry(double half_width, double poisson)
        : half_width_(half_width), poisson_(poisson) {
        if (!(half_width > 0.0))
            throw InvalidParameterError("PlateGeometry: half_width must be positive");
        if (!(poisson > 0.0 && poisson < 1.0))
            throw InvalidParameterError("PlateGeometry: poisson ratio must lie in (0,1)");
    }

    double half_width() const { return half_width_; }
    double poisson() const { return poisson_; }

    // The model targets long narrow decks (2*ell well below the span).  The
    // formulas stay valid for wide plates, so this is advisory only.
    bool is_narrow() const { return 2.0 * half_width_ < std::numbers::pi; }

private:
    double half_width_;
    double poisson_;
};

}  // namespace plategap
