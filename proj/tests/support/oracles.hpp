#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "frechet_approx/core/multi_index.hpp"
#include "frechet_approx/core/spectral_function.hpp"

namespace fapx::testing {

/// Composite trapezoid rule on [a, b] with n intervals.
inline std::complex<double> trapezoid(const std::function<std::complex<double>(double)>& f, double a, double b,
                                      long n)
{
    const double h = (b - a) / n;
    std::complex<double> s = 0.5 * (f(a) + f(b));
    for (long i = 1; i < n; ++i)
        s += f(a + i * h);
    return s * h;
}

/// Composite Simpson rule on [a, b] with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, long n)
{
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (long i = 1; i < n; ++i)
        s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

/// d^alpha of an atom sum evaluated directly: sum a_n prod_j (i theta_nj)^{alpha_j} e^{i theta_n x}.
inline std::complex<double> derivative_at(const SpectralFunction& f, const std::vector<int>& alpha,
                                          const std::vector<double>& x)
{
    std::complex<double> s = 0.0;
    for (const Atom& a : f.atoms()) {
        std::complex<double> term = a.amplitude;
        double phase = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            for (int k = 0; k < alpha[j]; ++k)
                term *= std::complex<double>(0.0, a.frequency[j]);
            phase += a.frequency[j] * x[j];
        }
        s += term * std::polar(1.0, phase);
    }
    return s;
}

/// H^ell norm on a 1-d interval by Simpson quadrature of the direct derivatives.
inline double sobolev_norm_simpson_1d(const SpectralFunction& f, int ell, long intervals)
{
    const double a = f.domain().lower(0), b = f.domain().upper(0);
    double total = 0.0;
    for (int k = 0; k <= ell; ++k)
        total += simpson([&](double x) { return std::norm(derivative_at(f, {k}, {x})); }, a, b, intervals);
    return std::sqrt(total);
}

} // namespace fapx::testing
