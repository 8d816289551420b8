#pragma once

#include <complex>
#include <span>
#include <vector>

#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/multi_index.hpp"
#include "frechet_approx/core/spectral_function.hpp"

namespace fapx {

inline constexpr int kDefaultMaxSobolevOrder = 12;

/// Per-order energies: terms[j] = sum_{|alpha| = j} ||d^alpha f||^2_{L2(U)},
/// j = 0..max_order, computed from the closed-form Gram matrix. Each term is
/// clamped at zero so partial sums are monotone.
std::vector<double> sobolev_order_terms(const SpectralFunction& f, int max_order,
                                        int order_cap = kDefaultMaxSobolevOrder);

/// Exact H^ell(U) norm (sum over |alpha| <= ell of squared L2 norms).
double sobolev_norm(const SpectralFunction& f, int ell, int order_cap = kDefaultMaxSobolevOrder);

/// ||d^alpha f||_{L2(U)}
double derivative_norm(const SpectralFunction& f, const MultiIndex& alpha);

/// <f, g>_{H^ell(U)} = sum_{|alpha|<=ell} \int_U d^alpha f conj(d^alpha g).
std::complex<double> sobolev_inner(const SpectralFunction& f, const SpectralFunction& g, int ell);

/// sum_{|alpha| <= ell} prod_j (theta_j phi_j)^{alpha_j}
long double sobolev_kernel(std::span<const double> theta, std::span<const double> phi, int ell);

struct GridNormResult {
    double value = 0.0;
    // Spectral content found above a quarter of the per-axis resolution.
    bool under_resolved = false;
};

/// Quadrature oracle for the H^ell norm of periodic samples: spectral
/// differentiation on the grid followed by the periodic trapezoid rule.
GridNormResult sobolev_norm_grid(const GridFunction& f, int ell);

/// d^alpha of periodic samples by multiplying the DFT with (i kappa)^alpha.
GridFunction spectral_derivative(const GridFunction& f, const MultiIndex& alpha);

} // namespace fapx
