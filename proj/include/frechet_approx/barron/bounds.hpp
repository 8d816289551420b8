#pragma once

#include <cstddef>
#include <vector>

#include "frechet_approx/barron/barron_norm.hpp"
#include "frechet_approx/barron/fourier_profile.hpp"
#include "frechet_approx/core/box_domain.hpp"
#include "frechet_approx/core/multi_index.hpp"

namespace fapx {

/// ||f|| (1/(c beta))^{|alpha|/beta} (|alpha|!)^{1/beta}; log domain above order 20.
double derivative_bound_rhs(const BarronWeight& weight, const MultiIndex& alpha, double barron_norm_value);

struct EmbeddingViolation {
    int order;
    std::vector<double> point;
    double lhs;
    double rhs;
};

struct EmbeddingReport {
    double barron_norm = 0.0;
    std::vector<double> max_ratio;         // per order |alpha|, sup |d^alpha f| / rhs
    std::vector<EmbeddingViolation> violations;
    // Smallest C with sup|d^alpha f| <= C (1/(c beta))^{|alpha|/beta} (|alpha|!)^{1/beta}
    // for every tested alpha; compare against barron_norm.
    double smallest_constant = 0.0;
    bool passed() const noexcept { return violations.empty(); }
};

/// Checks the pointwise derivative bound for a catalog profile on a tensor
/// grid over `domain` (points_per_axis nodes, endpoints included), with
/// 1e-9 absolute slack.
EmbeddingReport check_embedding(const FourierProfile& profile, const BarronWeight& weight,
                                const BoxDomain& domain, int max_order, int points_per_axis = 201);

/// Charlier's constant in |H_n(x)| <= k sqrt(2^n n!) exp(x^2/2).
inline constexpr double kCharlierConstant = 1.086435;

/// exp(|R|^2/2) k^d sqrt(2)^{|alpha|} sqrt(|alpha|!)
double gaussian_hermite_bound(const MultiIndex& alpha, const std::vector<double>& R_U,
                              double k = kCharlierConstant);

struct HermiteCheck {
    bool holds = true;
    double max_ratio = 0.0;   // sup |d^alpha e^{-|x|^2}| / (bound e^{-|x|^2})
};

/// Verifies |d^alpha exp(-|x|^2)| <= bound * exp(-|x|^2) on a tensor grid.
HermiteCheck gaussian_hermite_check(const MultiIndex& alpha, const BoxDomain& domain,
                                    int points_per_axis = 10001, double k = kCharlierConstant);

struct CounterexampleBound {
    int K = 0;              // floor(n^beta c beta)
    bool trivial = false;   // K < 1: no information, value 0
    double log_value = 0.0;
    double value = 0.0;     // may be +inf when exp(log_value) overflows
};

/// Lower bound on the exponential Barron norm of cos(n x)/sqrt(pi):
/// |U|^{-1/2} (exp(K - 1) / (sqrt(2 pi) K))^{1/beta}, K = floor(n^beta c beta).
CounterexampleBound counterexample_lower_bound(long long n, const BarronWeight& weight, double domain_volume);

} // namespace fapx
