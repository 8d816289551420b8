#include "frechet_approx/seminorms/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/fft.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/seminorms/gram.hpp"

namespace fapx {
namespace {

using LComplex = std::complex<long double>;

// h[j] = complete homogeneous symmetric polynomial of degree j in p_1..p_d,
// i.e. sum over |alpha| = j of prod_i p_i^{alpha_i}.
void homogeneous_sums(std::span<const double> theta, std::span<const double> phi, int max_order,
                      std::vector<long double>& h)
{
    h.assign(static_cast<std::size_t>(max_order) + 1, 0.0L);
    h[0] = 1.0L;
    std::vector<long double> next(h.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const long double p = static_cast<long double>(theta[i]) * phi[i];
        if (i == 0) {
            for (int j = 1; j <= max_order; ++j)
                h[j] = h[j - 1] * p;
            continue;
        }
        // adding one variable: next[j] = sum_t p^t h[j - t] = h[j] + p next[j-1]
        next[0] = h[0];
        for (int j = 1; j <= max_order; ++j)
            next[j] = h[j] + p * next[j - 1];
        h.swap(next);
    }
}

void check_order(int ell, int cap)
{
    if (ell < 0)
        throw InputError("Sobolev order must be nonnegative");
    if (ell > cap)
        throw InputError("Sobolev order " + std::to_string(ell) + " exceeds configured maximum " +
                         std::to_string(cap));
}

LComplex to_l(std::complex<double> z) { return {z.real(), z.imag()}; }

} // namespace

long double sobolev_kernel(std::span<const double> theta, std::span<const double> phi, int ell)
{
    std::vector<long double> h;
    homogeneous_sums(theta, phi, ell, h);
    long double s = 0.0L;
    for (long double v : h)
        s += v;
    return s;
}

std::vector<double> sobolev_order_terms(const SpectralFunction& f, int max_order, int order_cap)
{
    check_order(max_order, order_cap);
    const auto& atoms = f.atoms();
    const std::size_t n = atoms.size();
    const long double vol = f.domain().volume();
    std::vector<long double> acc(static_cast<std::size_t>(max_order) + 1, 0.0L);
    std::vector<long double> h;
    for (std::size_t a = 0; a < n; ++a) {
        const LComplex amp_a = to_l(atoms[a].amplitude);
        homogeneous_sums(atoms[a].frequency, atoms[a].frequency, max_order, h);
        const long double diag = std::norm(amp_a) * vol;
        for (int j = 0; j <= max_order; ++j)
            acc[j] += diag * h[j];
        for (std::size_t b = a + 1; b < n; ++b) {
            const LComplex g = box_exponential_integral_ld(atoms[a].frequency, atoms[b].frequency, f.domain());
            const long double cross = 2.0L * (amp_a * std::conj(to_l(atoms[b].amplitude)) * g).real();
            homogeneous_sums(atoms[a].frequency, atoms[b].frequency, max_order, h);
            for (int j = 0; j <= max_order; ++j)
                acc[j] += cross * h[j];
        }
    }
    std::vector<double> terms(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j)
        terms[j] = std::max(0.0, static_cast<double>(acc[j]));
    return terms;
}

double sobolev_norm(const SpectralFunction& f, int ell, int order_cap)
{
    auto terms = sobolev_order_terms(f, ell, order_cap);
    double s = 0.0;
    for (double t : terms)
        s += t;
    return std::sqrt(s);
}

double derivative_norm(const SpectralFunction& f, const MultiIndex& alpha)
{
    return sobolev_norm(f.derivative(alpha), 0);
}

std::complex<double> sobolev_inner(const SpectralFunction& f, const SpectralFunction& g, int ell)
{
    if (!(f.domain() == g.domain()))
        throw InputError("sobolev_inner: domain mismatch");
    check_order(ell, kDefaultMaxSobolevOrder);
    LComplex sum{0.0L, 0.0L};
    for (const auto& a : f.atoms()) {
        for (const auto& b : g.atoms()) {
            const LComplex gr = box_exponential_integral_ld(a.frequency, b.frequency, f.domain());
            sum += to_l(a.amplitude) * std::conj(to_l(b.amplitude)) * gr *
                   sobolev_kernel(a.frequency, b.frequency, ell);
        }
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

GridFunction spectral_derivative(const GridFunction& f, const MultiIndex& alpha)
{
    if (alpha.dim() != f.dim())
        throw InputError("spectral_derivative: multi-index dimension mismatch");
    std::vector<Complex> data(f.samples().begin(), f.samples().end());
    if (alpha.order() == 0)
        return GridFunction(f.domain(), f.resolution(), std::move(data));
    const auto& res = f.resolution();
    fft_inplace(data, res, FftDirection::Forward);
    const double scale = 1.0 / static_cast<double>(data.size());
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        auto k = f.unflatten(flat);
        Complex factor{scale, 0.0};
        for (std::size_t j = 0; j < k.size(); ++j) {
            const int n = res[j];
            const int kk = signed_bin(k[j], n);
            // The Nyquist mode of an even grid has no well-defined odd derivative.
            if (n % 2 == 0 && kk == -n / 2 && alpha[j] % 2 == 1) {
                factor = 0.0;
                break;
            }
            const double kappa = 2.0 * kPi * kk / f.domain().side(j);
            for (int p = 0; p < alpha[j]; ++p)
                factor *= Complex{0.0, kappa};
        }
        data[flat] *= factor;
    }
    fft_inplace(data, res, FftDirection::Backward);
    return GridFunction(f.domain(), f.resolution(), std::move(data));
}

GridNormResult sobolev_norm_grid(const GridFunction& f, int ell)
{
    check_order(ell, kDefaultMaxSobolevOrder);
    GridNormResult result;

    // Resolution check on the raw spectrum.
    {
        std::vector<Complex> data(f.samples().begin(), f.samples().end());
        fft_inplace(data, f.resolution(), FftDirection::Forward);
        long double total = 0.0L;
        long double high = 0.0L;
        for (std::size_t flat = 0; flat < data.size(); ++flat) {
            const long double e = std::norm(data[flat]);
            total += e;
            auto k = f.unflatten(flat);
            for (std::size_t j = 0; j < k.size(); ++j) {
                if (4 * std::abs(signed_bin(k[j], f.resolution()[j])) > f.resolution()[j]) {
                    high += e;
                    break;
                }
            }
        }
        result.under_resolved = total > 0.0L && high > 1e-20L * total;
    }

    long double sum = 0.0L;
    const double cell = f.cell_volume();
    for (const auto& alpha : multi_indices_up_to(f.dim(), ell)) {
        GridFunction d = spectral_derivative(f, alpha);
        long double s = 0.0L;
        for (const auto& v : d.samples())
            s += std::norm(v);
        sum += s * cell;
    }
    result.value = std::sqrt(static_cast<double>(sum));
    return result;
}

} // namespace fapx
