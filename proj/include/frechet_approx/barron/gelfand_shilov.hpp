#pragma once

#include <string>

#include "frechet_approx/barron/fourier_profile.hpp"
#include "frechet_approx/core/spectral_function.hpp"

namespace fapx {

struct GelfandShilovParams {
    double s;
    double sigma;
    double r;
};

struct GelfandShilovRange {
    double spatial = 8.0;
    double frequency = 16.0;
    int points = 4001;   // per axis sample count on [-range, range]
};

/// Evidence for |f(x)| <= A exp(-r|x|^s) and |fhat(xi)| <= B exp(-r|xi|^sigma):
/// sup-estimates of A and B on a range and on the doubled range.
struct GelfandShilovReport {
    bool applicable = true;
    double A = 0.0, A_doubled = 0.0;
    double B = 0.0, B_doubled = 0.0;
    bool spatial_stable = false;     // relative change under doubling <= 5%
    bool frequency_stable = false;
    bool member = false;
    std::string note;
};

GelfandShilovReport gelfand_shilov_check(const FourierProfile& profile, const GelfandShilovParams& params,
                                         GelfandShilovRange range = {});

/// Atom sums have spike spectra; always reported as not applicable.
GelfandShilovReport gelfand_shilov_check(const SpectralFunction& f, const GelfandShilovParams& params);

} // namespace fapx
