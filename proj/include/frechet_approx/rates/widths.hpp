#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "frechet_approx/rates/rate_function.hpp"

namespace fapx {

/// ceil(-log2 eps) + 1 for eps in (0, 1]; -log2 eps is snapped to an
/// integer when within 1e-12 of one.
int ell_epsilon(double epsilon);

struct WidthResult {
    std::string theorem;
    int ell_epsilon = 0;
    std::int64_t N_sufficient = 1;
    bool saturated = false;           // formula exceeded the int64 range; N is its maximum
    double threshold = 0.0;           // argument handed to the inverse rate
    nlohmann::ordered_json inputs;    // echo of everything that produced N
};

void to_json(nlohmann::ordered_json& j, const WidthResult& w);

/// Monotonic growth: per-order rates r_ell, growth p_k <= M_ell p_ell.
/// N = ceil(r^{-1}(min{r(1), 1 / (2^ell C_f M_ell)})) at ell = ell_eps.
WidthResult width_monotonic(double epsilon, double C_f, const GrowthSequence& growth,
                            const std::map<int, RateFunction>& rates);

/// Bounded growth: single rate on p_0, p_ell <= M_ell p_0.
/// N = ceil(r^{-1}(min{r(1), 2^{-ell} / (C_f M_ell)})).
WidthResult width_bounded(double epsilon, double C_f, const GrowthSequence& growth,
                          const RateFunction& rate);

/// Exponential spectral Barron targets:
/// N = max{1, ceil(((1/c_ell) ln(2^ell C_ell ||f||))^{d/beta})}.
WidthResult width_exp_barron(double epsilon, double barron_norm, double c_ell, double C_ell,
                             double beta, int d);

/// Barron-bandlimited targets: M = <Omega>^ell,
/// N = ceil((2^{-ell} / (||f|| M))^{-2}).
WidthResult width_bandlimited(double epsilon, double barron_bl_norm, double omega);

} // namespace fapx
