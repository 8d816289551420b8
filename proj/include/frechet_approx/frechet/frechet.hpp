#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frechet_approx/core/spectral_function.hpp"
#include "frechet_approx/seminorms/seminorm_sequence.hpp"

namespace fapx {

/// d(f) = sum_{ell=0}^{L} 2^{-ell} p_ell(f) / (1 + p_ell(f)), truncated at L.
/// The omitted tail is below 2^{-L}.
class FrechetMetric {
public:
    FrechetMetric(SeminormSequence seminorms, int truncation_level);

    const SeminormSequence& seminorms() const noexcept { return seminorms_; }
    int truncation_level() const noexcept { return truncation_level_; }

private:
    SeminormSequence seminorms_;
    int truncation_level_;
};

struct DistanceResult {
    double value = 0.0;
    double tail_bound = 0.0;   // true distance lies in [value, value + tail_bound]
};

/// Truncated series from precomputed seminorm values p_0..p_L (L = size-1).
/// Infinite entries contribute their full weight.
DistanceResult frechet_series(std::span<const double> seminorm_values);

DistanceResult frechet_distance(const SpectralFunction& f, const SpectralFunction& g,
                                const FrechetMetric& metric);

struct BestError {
    std::size_t index = 0;
    DistanceResult best;
    std::vector<DistanceResult> all;
};

/// Minimum of frechet_distance(target, candidate) over a finite candidate set,
/// lowest index on ties. Candidates are scored on up to `workers` threads.
BestError best_error(const SpectralFunction& target, std::span<const SpectralFunction> candidates,
                     const FrechetMetric& metric, std::size_t workers = 1);

/// (2 - 2^{-ell}) M p / (1 + M p) + 2^{-ell}: the split-series upper bound on
/// the metric when p_k <= M p_ell for k <= ell. p may be +inf.
double truncated_upper_bound(double p_ell_value, double M_ell, int ell);

/// ceil(-log2 tolerance) + 2
int default_truncation_level(double tolerance);

} // namespace fapx
