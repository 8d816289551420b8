#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "frechet_approx/core/box_domain.hpp"
#include "frechet_approx/core/multi_index.hpp"
#include "frechet_approx/core/spectral_function.hpp"

namespace fapx {

/// Frequency-side description of a function under the symmetric convention
///   fhat(xi) = (2 pi)^{-d/2} \int f(x) exp(-i x.xi) dx.
///
/// Catalog members (all optionally translated by `center` in space, which
/// multiplies fhat by exp(-i center.xi)):
///   gaussian(a):       f = A exp(-a|x|^2),  fhat = A (2a)^{-d/2} exp(-|xi|^2 / (4a))
///   raised_cosine(W):  fhat = A prod_j (1 + cos(pi xi_j / W)) / 2 on [-W, W]^d
///   compact_bump(W):   fhat = A prod_j exp(1 - 1 / (1 - (xi_j / W)^2)) on (-W, W)^d
/// Gridded profiles hold samples at the midpoints of a regular grid over a
/// frequency box and vanish outside it.
class FourierProfile {
public:
    enum class Kind { Gaussian, RaisedCosine, CompactBump, Gridded };

    static FourierProfile gaussian(std::size_t dim, double a, Complex amplitude = 1.0);
    static FourierProfile raised_cosine(std::size_t dim, double omega, Complex amplitude = 1.0);
    static FourierProfile compact_bump(std::size_t dim, double omega, Complex amplitude = 1.0);
    static FourierProfile gridded(BoxDomain frequency_box, std::vector<int> resolution,
                                  std::vector<Complex> samples);

    Kind kind() const noexcept { return kind_; }
    std::string name() const;
    std::size_t dim() const noexcept { return dim_; }
    Complex amplitude() const noexcept { return amplitude_; }
    double parameter() const noexcept { return param_; }
    const std::vector<double>& center() const noexcept { return center_; }

    /// Copy translated to `center` in space.
    FourierProfile centered_at(std::vector<double> center) const;
    FourierProfile scaled(Complex factor) const;

    bool compact() const noexcept { return kind_ != Kind::Gaussian; }
    /// Half-width W of the support box [-W, W]^d (infinite for Gaussians).
    /// Gridded profiles report the max-norm radius of their box.
    double support_halfwidth() const noexcept;
    /// Support box for compact profiles.
    BoxDomain support_box() const;

    Complex value(std::span<const double> xi) const;
    /// log |fhat(xi)|, closed form for Gaussians (no underflow).
    double log_abs_value(std::span<const double> xi) const;
    /// |fhat| as a function of |xi| for radially symmetric profiles.
    double radial_abs(double radius) const;
    double radial_log_abs(double radius) const;
    bool radial() const noexcept { return kind_ == Kind::Gaussian; }

    /// f(x) by closed form (Gaussian, raised cosine away from removable
    /// singularities) or Gauss-Legendre quadrature of the inverse transform.
    Complex spatial(std::span<const double> x) const;
    /// d^alpha f(x); Hermite closed form for Gaussians, quadrature otherwise.
    Complex spatial_derivative(std::span<const double> x, const MultiIndex& alpha) const;
    /// log |f(x)|, closed form for Gaussians.
    double log_abs_spatial(std::span<const double> x) const;

    const BoxDomain& grid_box() const;
    const std::vector<int>& grid_resolution() const noexcept { return resolution_; }
    std::span<const Complex> grid_samples() const noexcept { return samples_; }

private:
    FourierProfile(Kind kind, std::size_t dim, double param, Complex amplitude);

    Complex base_value(std::span<const double> xi) const;
    Complex base_spatial_derivative(std::span<const double> x, const MultiIndex& alpha) const;

    Kind kind_;
    std::size_t dim_;
    double param_;
    Complex amplitude_;
    std::vector<double> center_;
    // Gridded only
    std::vector<BoxDomain> box_;
    std::vector<int> resolution_;
    std::vector<Complex> samples_;
};

/// {"name": "gaussian", "dim": 1, "a": 1} / {"name": "raised_cosine", "dim": 1,
/// "omega": 3.14} / {"name": "compact_bump", ...}; optional "amplitude" (real)
/// and "center" (array).
FourierProfile profile_from_json(const nlohmann::ordered_json& j);
void to_json(nlohmann::ordered_json& j, const FourierProfile& p);

/// Physicists' Hermite polynomials H_0..H_n at x by the three-term recurrence
/// H_{k+1} = 2x H_k - 2k H_{k-1}.
std::vector<double> hermite_values(int n, double x);

struct SpectralDiscretization {
    double spacing = 0.0;  // frequency step; 0 picks a default from the domain
    double radius = 0.0;   // truncation radius; 0 picks where |fhat| < 1e-17 peak
};

/// Atom-sum approximation of the inverse transform on `domain`:
/// f(x) ~ (2 pi)^{-d/2} sum_k step^d fhat(xi_k) exp(i xi_k . x) over a
/// lattice xi_k = k * step with |xi_k|_inf <= radius.
SpectralFunction discretize_profile(const FourierProfile& profile, const BoxDomain& domain,
                                    SpectralDiscretization disc = {});

} // namespace fapx
