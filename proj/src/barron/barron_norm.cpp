#include "frechet_approx/barron/barron_norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/fft.hpp"
#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/numeric.hpp"

namespace fapx {
namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

double unit_sphere_area(std::size_t d)
{
    const double h = 0.5 * static_cast<double>(d);
    return 2.0 * std::pow(kPi, h) / std::tgamma(h);
}

double radial_norm(const FourierProfile& profile, const BarronWeight& weight, const BarronQuadrature& q)
{
    const double d = static_cast<double>(profile.dim());
    const double log_area = std::log(unit_sphere_area(profile.dim()));
    auto log_integrand = [&](double r) {
        const double radial = d > 1.0 ? (d - 1.0) * std::log(r) : 0.0;
        return log_area + radial + weight.log_value(r) + profile.radial_log_abs(r);
    };

    // Scan dyadic shells for the peak and the first radius past it where the
    // integrand has dropped below truncation_fraction of the peak.
    const double log_fraction = std::log(q.truncation_fraction);
    double previous_partial = -1.0;
    double peak = -std::numeric_limits<double>::infinity();
    double cutoff = 0.0;
    constexpr int kShellSamples = 32;
    for (double lo = 0.0, hi = 1.0;; lo = hi, hi *= 2.0) {
        if (lo > q.max_radius)
            throw DivergenceError("Barron integrand does not decay below max_radius");
        double last_above = lo;
        double prev = -std::numeric_limits<double>::infinity();
        bool decreasing = false;
        for (int i = 1; i <= kShellSamples; ++i) {
            const double r = lo + (hi - lo) * i / kShellSamples;
            const double v = log_integrand(r);
            peak = std::max(peak, v);
            decreasing = v < prev;
            prev = v;
            if (v >= peak + log_fraction)
                last_above = r;
        }
        if (decreasing && prev < peak + log_fraction) {
            // Bisect for the crossing between the last sample above threshold and hi.
            double a = last_above, b = hi;
            for (int it = 0; it < 60 && b - a > 1e-12 * b; ++it) {
                const double m = 0.5 * (a + b);
                (log_integrand(m) >= peak + log_fraction ? a : b) = m;
            }
            cutoff = b;
            break;
        }
        if (hi >= q.divergence_onset) {
            // Partial integrals on a common scale; a tenfold jump means the
            // integrand is not settling.
            auto scaled = [&](double r) { return std::exp(log_integrand(r) - peak); };
            const double partial = GK::integrate(scaled, 0.0, hi, 15, 1e-6);
            const double earlier = GK::integrate(scaled, 0.0, lo, 15, 1e-6);
            if (previous_partial >= 0.0 && partial > 10.0 * earlier)
                throw DivergenceError("Barron integrand partial sums keep growing tenfold");
            previous_partial = partial;
        }
    }

    auto integrand = [&](double r) { return std::exp(log_integrand(r) - peak); };
    constexpr int kPieces = 16;
    double sum = 0.0;
    for (int i = 0; i < kPieces; ++i) {
        const double a = cutoff * i / kPieces;
        const double b = cutoff * (i + 1) / kPieces;
        sum += GK::integrate(integrand, a, b, 15, q.relative_tolerance);
    }
    const double value = sum * std::exp(peak);
    if (!std::isfinite(value))
        throw DivergenceError("Barron norm overflows double precision");
    return value;
}

// Nested adaptive quadrature over a box, splitting each axis at zero.
double box_integral(const std::function<double(std::span<const double>)>& f, const BoxDomain& box,
                    double tol)
{
    const std::size_t d = box.dim();
    std::vector<double> xi(d, 0.0);
    std::function<double(std::size_t)> level = [&](std::size_t j) -> double {
        auto inner = [&](double t) {
            xi[j] = t;
            return j + 1 == d ? f(xi) : level(j + 1);
        };
        const double lo = box.lower(j), hi = box.upper(j);
        const int depth = j + 1 == d ? 15 : 10;
        if (lo < 0.0 && hi > 0.0)
            return GK::integrate(inner, lo, 0.0, depth, tol) + GK::integrate(inner, 0.0, hi, depth, tol);
        return GK::integrate(inner, lo, hi, depth, tol);
    };
    return level(0);
}

double gridded_norm(const FourierProfile& profile, const BarronWeight& weight)
{
    const BoxDomain& box = profile.grid_box();
    const auto& res = profile.grid_resolution();
    const auto samples = profile.grid_samples();
    const std::size_t d = profile.dim();
    double cell = 1.0;
    for (std::size_t j = 0; j < d; ++j)
        cell *= box.side(j) / res[j];
    std::vector<double> xi(d);
    double sum = 0.0;
    for (std::size_t flat = 0; flat < samples.size(); ++flat) {
        std::size_t rem = flat;
        for (std::size_t j = d; j-- > 0;) {
            xi[j] = box.lower(j) + (static_cast<double>(rem % res[j]) + 0.5) * box.side(j) / res[j];
            rem /= res[j];
        }
        sum += weight(euclidean_norm(xi)) * std::abs(samples[flat]);
    }
    return sum * cell;
}

} // namespace

double BarronWeight::log_value(double radius) const
{
    if (c == 0.0)
        return 0.0;
    return c * std::pow(radius, beta);
}

double BarronWeight::operator()(double radius) const { return std::exp(log_value(radius)); }

double barron_norm(const FourierProfile& profile, const BarronWeight& weight, BarronQuadrature q)
{
    if (!(weight.beta > 0.0) || weight.c < 0.0)
        throw InputError("barron_norm: weight needs beta > 0 and c >= 0");
    if (profile.kind() != FourierProfile::Kind::Gridded && profile.amplitude() == Complex{0.0, 0.0})
        return 0.0;
    switch (profile.kind()) {
    case FourierProfile::Kind::Gaussian:
        return radial_norm(profile, weight, q);
    case FourierProfile::Kind::Gridded:
        return gridded_norm(profile, weight);
    default: {
        auto f = [&](std::span<const double> xi) {
            return weight(euclidean_norm(xi)) * std::abs(profile.value(xi));
        };
        return box_integral(f, profile.support_box(), std::max(q.relative_tolerance, 1e-10));
    }
    }
}

double barron_bl_norm(const FourierProfile& profile, BandlimitedNormConfig config)
{
    if (!profile.compact())
        throw PreconditionError("barron_bl_norm: profile is not compactly supported");
    const std::size_t d = profile.dim();
    const int m = config.support_points > 0 ? config.support_points : (d == 1 ? 8192 : 256);
    const int pad = config.pad > 0 ? config.pad : (d == 1 ? 8 : 4);
    if (pad < 2)
        throw InputError("barron_bl_norm: padding factor must be at least 2");
    const BoxDomain support = profile.support_box();
    const double w = profile.support_halfwidth();
    const double h = 2.0 * w / m;
    const int n = m * pad;

    std::vector<int> dims(d, n);
    std::vector<Complex> data(grid_size(dims));
    std::vector<double> xi(d);
    double peak = 0.0;
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        std::size_t rem = flat;
        bool inside = true;
        for (std::size_t j = d; j-- > 0;) {
            xi[j] = -pad * w + static_cast<double>(rem % n) * h;
            rem /= n;
            inside = inside && xi[j] >= support.lower(j) && xi[j] <= support.upper(j);
        }
        if (inside) {
            data[flat] = profile.value(xi);
            peak = std::max(peak, std::abs(data[flat]));
        }
    }

    // fhat must vanish on the boundary of its support for the zero extension
    // to be continuous; probe each face on a coarse tensor grid.
    const int probe = d == 1 ? 1 : 65;
    double boundary = 0.0;
    for (std::size_t axis = 0; axis < d; ++axis) {
        std::vector<int> pdims(d, probe);
        pdims[axis] = 1;
        for (double side : {support.lower(axis), support.upper(axis)}) {
            for (std::size_t flat = 0; flat < grid_size(pdims); ++flat) {
                std::size_t rem = flat;
                for (std::size_t j = d; j-- > 0;) {
                    const int k = static_cast<int>(rem % pdims[j]);
                    rem /= pdims[j];
                    xi[j] = j == axis ? side
                                      : support.lower(j) + support.side(j) * k / std::max(probe - 1, 1);
                }
                boundary = std::max(boundary, std::abs(profile.value(xi)));
            }
        }
    }
    if (boundary > 1e-8 * peak)
        throw PreconditionError("barron_bl_norm: fhat does not vanish on the boundary of its support");

    fft_inplace(data, dims, FftDirection::Forward);
    const double dw = 2.0 * kPi / (n * h);
    const double scale = std::pow(2.0 * kPi, -0.5 * d) * std::pow(h * dw, static_cast<double>(d));
    std::vector<double> omega(d);
    double sum = 0.0;
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        std::size_t rem = flat;
        for (std::size_t j = d; j-- > 0;) {
            omega[j] = signed_bin(static_cast<int>(rem % n), n) * dw;
            rem /= n;
        }
        sum += (1.0 + euclidean_norm(omega)) * std::abs(data[flat]);
    }
    return sum * scale;
}

} // namespace fapx
