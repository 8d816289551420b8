#pragma once

#include "frechet_approx/barron/fourier_profile.hpp"

namespace fapx {

/// omega(xi) = exp(c |xi|^beta); c = 0 means omega == 1.
struct BarronWeight {
    double beta = 1.0;
    double c = 0.0;

    double operator()(double radius) const;
    double log_value(double radius) const;
};

struct BarronQuadrature {
    double relative_tolerance = 1e-11;
    // Truncate where omega |fhat| falls below this fraction of its peak.
    double truncation_fraction = 1e-14;
    double max_radius = 1e5;
    // Past this radius, partial integrals growing more than tenfold between
    // consecutive dyadic truncation radii are declared divergent.
    double divergence_onset = 1024.0;
};

/// \int omega(xi) |fhat(xi)| dxi for the given profile (one extension, so an
/// upper bound of the infimum over extensions). Throws DivergenceError when
/// no truncation radius exists below max_radius.
double barron_norm(const FourierProfile& profile, const BarronWeight& weight, BarronQuadrature q = {});

struct BandlimitedNormConfig {
    // Samples per axis across the support [-W, W]; 0 picks 8192 (1-d) or 256.
    int support_points = 0;
    // Padding factor of the zero-extended grid; 0 picks 8 (1-d) or 4.
    int pad = 0;
};

/// \int (1 + |w|) |ghat(w)| dw with g the zero extension of fhat off its
/// support box, ghat evaluated by a padded discrete transform. Throws
/// PreconditionError for non-compact profiles or when fhat does not vanish
/// on the boundary of its support (above 1e-8 of the peak).
double barron_bl_norm(const FourierProfile& profile, BandlimitedNormConfig config = {});

} // namespace fapx
