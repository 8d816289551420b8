#include "frechet_approx/frechet/frechet.hpp"

#include <cmath>
#include <string>

#include "frechet_approx/core/diagnostics.hpp"
#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/parallel.hpp"

namespace fapx {
namespace {

double saturate(double p) { return std::isinf(p) ? 1.0 : p / (1.0 + p); }

} // namespace

FrechetMetric::FrechetMetric(SeminormSequence seminorms, int truncation_level)
    : seminorms_(std::move(seminorms)), truncation_level_(truncation_level)
{
    if (truncation_level_ < 1)
        throw InputError("FrechetMetric: truncation level must be at least 1");
    if (truncation_level_ > seminorms_.max_index())
        throw InputError("FrechetMetric: truncation level " + std::to_string(truncation_level_) +
                         " exceeds the seminorm sequence's largest index " +
                         std::to_string(seminorms_.max_index()));
}

DistanceResult frechet_series(std::span<const double> seminorm_values)
{
    if (seminorm_values.empty())
        throw InputError("frechet_series: need at least p_0");
    DistanceResult r;
    double weight = 1.0;
    for (double p : seminorm_values) {
        if (!(p >= 0.0))
            throw InputError("frechet_series: seminorm values must be nonnegative");
        r.value += weight * saturate(p);
        weight *= 0.5;
    }
    r.tail_bound = std::ldexp(1.0, -static_cast<int>(seminorm_values.size() - 1));
    return r;
}

DistanceResult frechet_distance(const SpectralFunction& f, const SpectralFunction& g,
                                const FrechetMetric& metric)
{
    const auto& domain = metric.seminorms().domain();
    if (!(f.domain() == domain) || !(g.domain() == domain))
        throw InputError("frechet_distance: function domain differs from metric domain");
    const SpectralFunction diff = (f - g).canonicalize();
    // evaluate_through shares lower-order work across all ell for the ladder
    const auto values = metric.seminorms().evaluate_through(diff, metric.truncation_level());
    return frechet_series(values);
}

BestError best_error(const SpectralFunction& target, std::span<const SpectralFunction> candidates,
                     const FrechetMetric& metric, std::size_t workers)
{
    if (candidates.empty())
        throw InputError("best_error: candidate list is empty");
    BestError out;
    out.all.resize(candidates.size());
    parallel_for(candidates.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            out.all[i] = frechet_distance(target, candidates[i], metric);
    });
    for (std::size_t i = 1; i < out.all.size(); ++i)
        if (out.all[i].value < out.all[out.index].value)
            out.index = i;
    out.best = out.all[out.index];
    return out;
}

double truncated_upper_bound(double p_ell_value, double M_ell, int ell)
{
    if (!(p_ell_value >= 0.0) || !(M_ell >= 0.0) || ell < 0)
        throw InputError("truncated_upper_bound: inputs must be nonnegative");
    if (M_ell < 1.0)
        warn("truncated_upper_bound: growth constant M_ell < 1");
    const double tail = std::ldexp(1.0, -ell);
    const double mp = std::isinf(p_ell_value) && M_ell > 0.0 ? p_ell_value : M_ell * p_ell_value;
    return (2.0 - tail) * saturate(mp) + tail;
}

int default_truncation_level(double tolerance)
{
    if (!(tolerance > 0.0) || !(tolerance <= 1.0))
        throw InputError("default_truncation_level: tolerance must lie in (0, 1]");
    return static_cast<int>(std::ceil(-std::log2(tolerance))) + 2;
}

} // namespace fapx
