#include "frechet_approx/barron/gelfand_shilov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/numeric.hpp"

namespace fapx {
namespace {

// sup over [-range, range]^d of exp(log_abs(x) + r |x|^s), tensor sampling.
double sup_estimate(const std::function<double(std::span<const double>)>& log_abs, std::size_t d,
                    double range, int points, double r, double s)
{
    std::vector<int> dims(d, points);
    std::vector<double> x(d);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t flat = 0; flat < grid_size(dims); ++flat) {
        std::size_t rem = flat;
        for (std::size_t j = d; j-- > 0;) {
            x[j] = -range + 2.0 * range * static_cast<double>(rem % points) / (points - 1);
            rem /= points;
        }
        best = std::max(best, log_abs(x) + r * std::pow(euclidean_norm(x), s));
    }
    return std::exp(best);
}

bool stable(double a, double b)
{
    if (!std::isfinite(a) || !std::isfinite(b))
        return false;
    return std::abs(b - a) <= 0.05 * std::max(std::abs(a), std::numeric_limits<double>::min());
}

} // namespace

GelfandShilovReport gelfand_shilov_check(const FourierProfile& profile, const GelfandShilovParams& params,
                                         GelfandShilovRange range)
{
    if (!(params.s > 0.0) || !(params.sigma > 0.0) || params.r < 0.0)
        throw InputError("gelfand_shilov_check: need s, sigma > 0 and r >= 0");
    const std::size_t d = profile.dim();
    // Keep the sample spacing fixed when the range doubles.
    const int points = d == 1 ? range.points : std::min(range.points, 201);
    const int doubled = 2 * points - 1;
    auto spatial = [&](std::span<const double> x) { return profile.log_abs_spatial(x); };
    auto freq = [&](std::span<const double> xi) { return profile.log_abs_value(xi); };

    GelfandShilovReport rep;
    rep.A = sup_estimate(spatial, d, range.spatial, points, params.r, params.s);
    rep.A_doubled = sup_estimate(spatial, d, 2.0 * range.spatial, doubled, params.r, params.s);
    rep.B = sup_estimate(freq, d, range.frequency, points, params.r, params.sigma);
    rep.B_doubled = sup_estimate(freq, d, 2.0 * range.frequency, doubled, params.r, params.sigma);
    rep.spatial_stable = stable(rep.A, rep.A_doubled);
    rep.frequency_stable = stable(rep.B, rep.B_doubled);
    rep.member = rep.spatial_stable && rep.frequency_stable;
    if (!rep.spatial_stable)
        rep.note = "spatial sup estimate grows with the sampled range";
    else if (!rep.frequency_stable)
        rep.note = "frequency sup estimate grows with the sampled range";
    return rep;
}

GelfandShilovReport gelfand_shilov_check(const SpectralFunction&, const GelfandShilovParams&)
{
    GelfandShilovReport rep;
    rep.applicable = false;
    rep.note = "finite atom sums have no decaying Fourier transform";
    return rep;
}

} // namespace fapx
