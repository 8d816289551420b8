#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "frechet_approx/barron/fourier_profile.hpp"
#include "frechet_approx/fit/report.hpp"

namespace fapx {

/// Frequency samples of a bandlimited function at the midpoints of a
/// regular grid on [-omega, omega]^d (row-major, last axis fastest).
class BandlimitedTarget {
public:
    BandlimitedTarget(std::size_t dim, double omega, int points_per_axis, std::vector<Complex> samples);
    static BandlimitedTarget from_profile(const FourierProfile& profile, double omega, int points_per_axis);

    std::size_t dim() const noexcept { return dim_; }
    double omega() const noexcept { return omega_; }
    int points_per_axis() const noexcept { return points_; }
    double step() const noexcept { return 2.0 * omega_ / points_; }
    double cell_volume() const noexcept;
    std::size_t size() const noexcept { return samples_.size(); }
    std::span<const Complex> samples() const noexcept { return samples_; }
    /// Frequency node of a flat index.
    std::vector<double> node(std::size_t flat) const;
    /// Midpoint-rule L2([-omega, omega]^d) norm of `values` on this grid.
    double l2_norm(std::span<const Complex> values) const;
    /// ||<xi>^ell values||_{L2}, the H^ell(R^d) norm of the inverse transform.
    double bessel_norm(std::span<const Complex> values, int ell) const;
    /// Gridded profile over [-omega, omega]^d carrying `values`.
    FourierProfile as_profile(std::span<const Complex> values) const;

private:
    std::size_t dim_;
    double omega_;
    int points_;
    std::vector<Complex> samples_;
};

/// sigma_hat(t) = (1 + t^2)^{-s/2}
struct ActivationSpectrum {
    double s = 2.0;
    double operator()(double t) const;
};

struct BandlimitedFitConfig {
    double w_max = 8.0;
    int w_points = 0;              // per axis over [-w_max, w_max]; 0 picks 65 (1-d) or 17
    double b_max = 8.0;
    int b_points = 0;              // over [-b_max, b_max]; 0 picks 65 (1-d) or 33
    ActivationSpectrum sigma_hat;
    double improvement_tolerance = 1e-14;   // relative to ||target||
    std::size_t workers = 1;
};

void to_json(nlohmann::ordered_json& j, const BandlimitedFitConfig& c);
BandlimitedFitConfig bandlimited_config_from_json(const nlohmann::ordered_json& j);

/// Frequency-domain atom sigma_hat(<w, xi> + b) restricted to [-omega, omega]^d.
struct BandlimitedDictionaryAtom {
    std::vector<double> w;
    double b = 0.0;
};

struct BandlimitedFit {
    std::vector<BandlimitedDictionaryAtom> atoms;
    std::vector<Complex> amplitudes;
    std::vector<Complex> residual;      // target minus approximant on the grid
    FourierProfile approximant;
    FitReport report;
};

/// Candidate (w, b) pairs in canonical order: w over the tensor grid
/// restricted to the ball |w| <= w_max, b fastest.
std::vector<BandlimitedDictionaryAtom> bandlimited_candidates(std::size_t dim, const BandlimitedFitConfig& config);

/// Orthogonal matching pursuit over the candidate dictionary with amplitudes
/// solved by least squares in the frequency-domain L2 inner product. `warm`
/// atoms enter first, in order. report.final_error is the frequency-domain
/// L2 residual; report.parseval_relative_gap compares it with the spatial
/// residual obtained by an independent inverse transform.
BandlimitedFit fit_bandlimited(const BandlimitedTarget& target, int N, const BandlimitedFitConfig& config,
                               std::span<const BandlimitedDictionaryAtom> warm = {});

/// L2 norm of the inverse transform of grid values over one spatial period
/// 2 pi / step per axis, sampled at the grid's own resolution.
double spatial_l2_norm(const BandlimitedTarget& grid, std::span<const Complex> values);

} // namespace fapx
