#pragma once

#include <cstddef>
#include <limits>
#include <utility>

#include <json.hpp>

#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/core/spectral_function.hpp"
#include "frechet_approx/fit/report.hpp"

namespace fapx {

struct CosineFitConfig {
    int order = 0;                          // fit and measure in H^order(U)
    double theta_max = 128.0 * kPi;         // per-axis frequency search bound
    double refine_tolerance = 1e-10;        // golden-section tolerance in theta
    double max_condition = 1e12;            // Gram condition number limit
    int max_retries = 5;
    int polish_sweeps = 25;                 // final coordinate sweeps over all frequencies
    std::size_t workers = 1;
};

void to_json(nlohmann::ordered_json& j, const CosineFitConfig& c);
/// Missing keys keep their defaults.
CosineFitConfig cosine_config_from_json(const nlohmann::ordered_json& j);

/// Element of Sigma_{N,M}: at most N atoms with sum |a_n| <= M.
struct CosineNetwork {
    SpectralFunction network;
    double budget = std::numeric_limits<double>::infinity();
};

/// Orthogonal greedy fit in H^order(U). Each step picks the frequency that
/// maximizes |<r, e_theta>| / ||e_theta|| over a coarse grid (spacing
/// pi / side per axis, |theta_j| <= theta_max) refined by golden section,
/// then re-solves all amplitudes by least squares on the exact Gram matrix.
/// After the last step every frequency is re-refined against the residual
/// of the others and the amplitudes are solved once more.
/// Steps that fail to reduce the residual end the fit (early_stop). When
/// the final amplitudes exceed the budget they are rescaled onto it.
/// `warm` supplies initial frequencies (their amplitudes are re-solved).
std::pair<CosineNetwork, FitReport> fit_cosine(const SpectralFunction& target, int N, double budget,
                                               const CosineFitConfig& config,
                                               const SpectralFunction* warm = nullptr);

/// Same for sampled periodic targets; inner products with atoms use the
/// periodic trapezoid rule on spectrally differentiated samples.
std::pair<CosineNetwork, FitReport> fit_cosine(const GridFunction& target, int N, double budget,
                                               const CosineFitConfig& config,
                                               const SpectralFunction* warm = nullptr);

} // namespace fapx
