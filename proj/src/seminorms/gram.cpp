#include "frechet_approx/seminorms/gram.hpp"

#include <cmath>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/numeric.hpp"

namespace fapx {

std::complex<double> box_exponential_integral(std::span<const double> delta, const BoxDomain& domain)
{
    if (delta.size() != domain.dim())
        throw InputError("box_exponential_integral: dimension mismatch");
    std::complex<double> value{1.0, 0.0};
    for (std::size_t j = 0; j < delta.size(); ++j) {
        const double a = domain.lower(j);
        const double b = domain.upper(j);
        const double len = b - a;
        // (e^{i d b} - e^{i d a}) / (i d) written around the midpoint so the
        // small-|d| branch of sinc controls cancellation.
        value *= std::polar(len * sinc(0.5 * delta[j] * len), 0.5 * delta[j] * (a + b));
    }
    return value;
}

std::complex<long double> box_exponential_integral_ld(std::span<const double> lhs,
                                                      std::span<const double> rhs,
                                                      const BoxDomain& domain)
{
    std::complex<long double> value{1.0L, 0.0L};
    for (std::size_t j = 0; j < lhs.size(); ++j) {
        const long double a = domain.lower(j);
        const long double b = domain.upper(j);
        const long double len = b - a;
        const long double d = static_cast<long double>(lhs[j]) - static_cast<long double>(rhs[j]);
        value *= std::polar(len * sinc(0.5L * d * len), 0.5L * d * (a + b));
    }
    return value;
}

GramMatrix gram(const std::vector<std::vector<double>>& frequencies, const BoxDomain& domain)
{
    const auto n = static_cast<Eigen::Index>(frequencies.size());
    for (const auto& f : frequencies) {
        if (f.size() != domain.dim())
            throw InputError("gram: frequency length differs from domain dimension");
        for (double t : f)
            if (!std::isfinite(t))
                throw InputError("gram: non-finite frequency");
    }
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        g(i, i) = domain.volume();
        for (Eigen::Index k = i + 1; k < n; ++k) {
            auto v = box_exponential_integral_ld(frequencies[i], frequencies[k], domain);
            g(i, k) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
            g(k, i) = std::conj(g(i, k));
        }
    }
    return GramMatrix{std::move(g), frequencies, domain};
}

} // namespace fapx
