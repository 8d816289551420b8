#pragma once

#include <span>

#include "frechet_approx/rates/rate_function.hpp"

namespace fapx {

struct RatePoint {
    double N;
    double error;
};

enum class RateFamily { Power, StretchedExp };

/// Least-squares fit in transformed coordinates:
///   Power:        log e = log C - r log N
///   StretchedExp: log e = log C - c N^gamma   (gamma fixed by the caller)
/// r_squared is computed in the same coordinates.
struct RateFit {
    RateFamily family;
    double constant;    // C
    double exponent;    // r (Power) or c (StretchedExp); may be <= 0 for non-decaying data
    double gamma;
    double r_squared;
    double rms_residual;

    /// Throws InputError when the fitted parameters do not define a
    /// decreasing rate.
    RateFunction as_rate() const;
};

RateFit fit_rate(std::span<const RatePoint> points, RateFamily family, double gamma = 0.5);

} // namespace fapx
