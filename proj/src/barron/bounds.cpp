#include "frechet_approx/barron/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/numeric.hpp"

namespace fapx {
namespace {

// (1/(c beta))^{k/beta} (k!)^{1/beta} in log form.
double log_growth_factor(const BarronWeight& weight, int k)
{
    return (k / weight.beta) * std::log(1.0 / (weight.c * weight.beta)) + log_factorial(k) / weight.beta;
}

void require_weight(const BarronWeight& weight)
{
    if (!(weight.beta > 0.0) || !(weight.c > 0.0))
        throw InputError("derivative bound needs c > 0 and beta > 0");
}

} // namespace

double derivative_bound_rhs(const BarronWeight& weight, const MultiIndex& alpha, double barron_norm_value)
{
    require_weight(weight);
    if (barron_norm_value <= 0.0)
        return 0.0;
    return std::exp(std::log(barron_norm_value) + log_growth_factor(weight, alpha.order()));
}

EmbeddingReport check_embedding(const FourierProfile& profile, const BarronWeight& weight,
                                const BoxDomain& domain, int max_order, int points_per_axis)
{
    require_weight(weight);
    if (domain.dim() != profile.dim())
        throw InputError("check_embedding: dimension mismatch");
    if (max_order < 0 || points_per_axis < 2)
        throw InputError("check_embedding: need max_order >= 0 and at least two points per axis");

    EmbeddingReport report;
    report.barron_norm = barron_norm(profile, weight);
    report.max_ratio.assign(static_cast<std::size_t>(max_order) + 1, 0.0);

    const std::size_t d = profile.dim();
    std::vector<int> dims(d, points_per_axis);
    const std::size_t total = grid_size(dims);
    std::vector<double> x(d);
    for (const MultiIndex& alpha : multi_indices_up_to(d, max_order)) {
        const int k = alpha.order();
        const double rhs = derivative_bound_rhs(weight, alpha, report.barron_norm);
        const double growth = std::exp(log_growth_factor(weight, k));
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rem = flat;
            for (std::size_t j = d; j-- > 0;) {
                x[j] = domain.lower(j) + domain.side(j) * static_cast<double>(rem % points_per_axis) /
                                             (points_per_axis - 1);
                rem /= points_per_axis;
            }
            const double lhs = std::abs(profile.spatial_derivative(x, alpha));
            const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
            report.max_ratio[k] = std::max(report.max_ratio[k], ratio);
            report.smallest_constant = std::max(report.smallest_constant, lhs / growth);
            if (lhs > rhs + 1e-9)
                report.violations.push_back({k, x, lhs, rhs});
        }
    }
    return report;
}

double gaussian_hermite_bound(const MultiIndex& alpha, const std::vector<double>& R_U, double k)
{
    double r2 = 0.0;
    for (double r : R_U)
        r2 += r * r;
    const int n = alpha.order();
    return std::exp(0.5 * r2 + static_cast<double>(R_U.size()) * std::log(k) + 0.5 * n * std::log(2.0) +
                    0.5 * log_factorial(n));
}

HermiteCheck gaussian_hermite_check(const MultiIndex& alpha, const BoxDomain& domain, int points_per_axis,
                                    double k)
{
    if (alpha.dim() != domain.dim())
        throw InputError("gaussian_hermite_check: dimension mismatch");
    if (points_per_axis < 2)
        throw InputError("gaussian_hermite_check: need at least two points per axis");
    // d^alpha exp(-|x|^2) = prod_j (-1)^{alpha_j} H_{alpha_j}(x_j) exp(-x_j^2), so the
    // ratio to exp(-|x|^2) factorizes and its sup over a tensor grid is the
    // product of per-axis sups.
    std::vector<double> radius(domain.dim());
    double sup = 1.0;
    for (std::size_t j = 0; j < domain.dim(); ++j) {
        radius[j] = std::max(std::abs(domain.lower(j)), std::abs(domain.upper(j)));
        double axis_sup = 0.0;
        for (int i = 0; i < points_per_axis; ++i) {
            const double x = domain.lower(j) + domain.side(j) * i / (points_per_axis - 1);
            axis_sup = std::max(axis_sup, std::abs(hermite_values(alpha[j], x).back()));
        }
        sup *= axis_sup;
    }
    HermiteCheck check;
    check.max_ratio = sup / gaussian_hermite_bound(alpha, radius, k);
    check.holds = check.max_ratio <= 1.0;
    return check;
}

CounterexampleBound counterexample_lower_bound(long long n, const BarronWeight& weight, double domain_volume)
{
    require_weight(weight);
    if (n < 1 || !(domain_volume > 0.0))
        throw InputError("counterexample_lower_bound: need n >= 1 and positive volume");
    const double raw = std::pow(static_cast<double>(n), weight.beta) * weight.c * weight.beta;
    CounterexampleBound b;
    b.K = static_cast<int>(std::floor(raw + 1e-12 * std::max(1.0, raw)));
    if (b.K < 1) {
        b.trivial = true;
        b.log_value = -std::numeric_limits<double>::infinity();
        return b;
    }
    const double K = b.K;
    b.log_value = -0.5 * std::log(domain_volume) +
                  (K - 1.0 - std::log(std::sqrt(2.0 * kPi) * K)) / weight.beta;
    b.value = std::exp(b.log_value);
    return b;
}

} // namespace fapx
