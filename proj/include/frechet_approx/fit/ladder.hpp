#pragma once

#include <span>
#include <vector>

#include "frechet_approx/fit/bandlimited.hpp"
#include "frechet_approx/fit/cosine.hpp"

namespace fapx {

struct CosineCandidate {
    int width;
    CosineNetwork network;
    FitReport report;
};

/// Nested fits over strictly increasing widths, each warm-started from the
/// previous width's atoms. Empty or non-increasing widths are an input error.
std::vector<CosineCandidate> candidate_ladder(const SpectralFunction& target, std::span<const int> widths,
                                              double budget, const CosineFitConfig& config);
std::vector<CosineCandidate> candidate_ladder(const GridFunction& target, std::span<const int> widths,
                                              double budget, const CosineFitConfig& config);
std::vector<BandlimitedFit> candidate_ladder(const BandlimitedTarget& target, std::span<const int> widths,
                                             const BandlimitedFitConfig& config);

} // namespace fapx
