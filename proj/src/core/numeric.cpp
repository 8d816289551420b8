#include "frechet_approx/core/numeric.hpp"

#include <charconv>
#include <limits>

#include "frechet_approx/core/errors.hpp"

namespace fapx {

double euclidean_norm(std::span<const double> v) noexcept
{
    double s = 0.0;
    for (double t : v)
        s += t * t;
    return std::sqrt(s);
}

double japanese_bracket(std::span<const double> t) noexcept
{
    double s = 1.0;
    for (double v : t)
        s += v * v;
    return std::sqrt(s);
}

std::int64_t snapped_ceil(double x)
{
    if (!std::isfinite(x))
        throw InputError("snapped_ceil: non-finite value");
    double r = std::round(x);
    if (std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x)))
        x = r;
    double c = std::ceil(x);
    if (c >= 9.2e18 || c <= -9.2e18)
        throw InputError("snapped_ceil: value does not fit in a 64-bit integer");
    return static_cast<std::int64_t>(c);
}

double sinc(double t) noexcept
{
    if (std::abs(t) < 1e-6) {
        double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

long double sinc(long double t) noexcept
{
    if (std::abs(t) < 1e-6L) {
        long double t2 = t * t;
        return 1.0L - t2 / 6.0L + t2 * t2 / 120.0L;
    }
    return std::sin(t) / t;
}

std::string shortest_repr(double value)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace fapx
