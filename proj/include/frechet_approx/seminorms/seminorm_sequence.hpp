#pragma once

#include <functional>
#include <vector>

#include "frechet_approx/core/box_domain.hpp"
#include "frechet_approx/core/spectral_function.hpp"
#include "frechet_approx/seminorms/sobolev.hpp"

namespace fapx {

using SeminormFn = std::function<double(const SpectralFunction&)>;

/// Indexed family p_0, p_1, ... defining a Frechet topology.
class SeminormSequence {
public:
    enum class Kind { SobolevLadder, Custom };

    /// p_ell = H^ell(U) norm, p_0 = L2(U).
    static SeminormSequence sobolev_ladder(BoxDomain domain, int order_cap = kDefaultMaxSobolevOrder);

    /// p_ell = descriptors[ell]; indices past the end are an input error.
    static SeminormSequence custom(BoxDomain domain, std::vector<SeminormFn> descriptors);

    Kind kind() const noexcept { return kind_; }
    const BoxDomain& domain() const noexcept { return domain_; }

    /// Largest index this sequence can evaluate.
    int max_index() const noexcept;

    double evaluate(const SpectralFunction& f, int ell) const;

    /// p_0(f), ..., p_L(f). For the Sobolev ladder the per-order energies are
    /// computed once and accumulated.
    std::vector<double> evaluate_through(const SpectralFunction& f, int L) const;

private:
    SeminormSequence(Kind kind, BoxDomain domain, std::vector<SeminormFn> descriptors, int order_cap);

    Kind kind_;
    BoxDomain domain_;
    std::vector<SeminormFn> descriptors_;
    int order_cap_;
};

} // namespace fapx
