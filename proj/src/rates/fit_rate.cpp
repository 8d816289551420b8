#include "frechet_approx/rates/fit_rate.hpp"

#include <cmath>
#include <vector>

#include "frechet_approx/core/errors.hpp"

namespace fapx {

RateFunction RateFit::as_rate() const
{
    if (!(exponent > 0.0))
        throw InputError("fitted rate is not decreasing");
    if (family == RateFamily::Power)
        return RateFunction::power(constant, exponent);
    return RateFunction::stretched_exp(constant, exponent, gamma);
}

RateFit fit_rate(std::span<const RatePoint> points, RateFamily family, double gamma)
{
    if (points.size() < 4)
        throw InputError("fit_rate: need at least 4 points");
    if (family == RateFamily::StretchedExp && !(gamma > 0.0))
        throw InputError("fit_rate: gamma must be positive");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (!(p.error > 0.0) || !std::isfinite(p.error))
            throw InputError("fit_rate: errors must be positive and finite");
        if (!(p.N >= 1.0))
            throw InputError("fit_rate: widths must be >= 1");
        if (i > 0 && !(p.N > points[i - 1].N))
            throw InputError("fit_rate: widths must be strictly increasing");
        xs.push_back(family == RateFamily::Power ? std::log(p.N) : std::pow(p.N, gamma));
        ys.push_back(std::log(p.error));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        ss_res += r * r;
    }
    RateFit fit{};
    fit.family = family;
    fit.constant = std::exp(intercept);
    fit.exponent = -slope;
    fit.gamma = family == RateFamily::Power ? 1.0 : gamma;
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    fit.rms_residual = std::sqrt(ss_res / n);
    return fit;
}

} // namespace fapx
