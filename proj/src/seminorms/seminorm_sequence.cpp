#include "frechet_approx/seminorms/seminorm_sequence.hpp"

#include <cmath>
#include <string>

#include "frechet_approx/core/errors.hpp"

namespace fapx {

SeminormSequence::SeminormSequence(Kind kind, BoxDomain domain, std::vector<SeminormFn> descriptors,
                                   int order_cap)
    : kind_(kind), domain_(std::move(domain)), descriptors_(std::move(descriptors)), order_cap_(order_cap)
{
}

SeminormSequence SeminormSequence::sobolev_ladder(BoxDomain domain, int order_cap)
{
    return SeminormSequence(Kind::SobolevLadder, std::move(domain), {}, order_cap);
}

SeminormSequence SeminormSequence::custom(BoxDomain domain, std::vector<SeminormFn> descriptors)
{
    if (descriptors.empty())
        throw InputError("custom seminorm sequence needs at least one descriptor");
    for (const auto& d : descriptors)
        if (!d)
            throw InputError("custom seminorm sequence: empty descriptor");
    return SeminormSequence(Kind::Custom, std::move(domain), std::move(descriptors), 0);
}

int SeminormSequence::max_index() const noexcept
{
    return kind_ == Kind::SobolevLadder ? order_cap_ : static_cast<int>(descriptors_.size()) - 1;
}

double SeminormSequence::evaluate(const SpectralFunction& f, int ell) const
{
    return evaluate_through(f, ell).back();
}

std::vector<double> SeminormSequence::evaluate_through(const SpectralFunction& f, int L) const
{
    if (!(f.domain() == domain_))
        throw InputError("seminorm sequence: function domain differs from sequence domain");
    if (L < 0 || L > max_index())
        throw InputError("seminorm sequence: index " + std::to_string(L) + " outside [0, " +
                         std::to_string(max_index()) + "]");
    std::vector<double> values(static_cast<std::size_t>(L) + 1);
    if (kind_ == Kind::SobolevLadder) {
        auto terms = sobolev_order_terms(f, L, order_cap_);
        double partial = 0.0;
        for (int ell = 0; ell <= L; ++ell) {
            partial += terms[ell];
            values[ell] = std::sqrt(partial);
        }
        return values;
    }
    for (int ell = 0; ell <= L; ++ell) {
        values[ell] = descriptors_[ell](f);
        if (!(values[ell] >= 0.0))
            throw InputError("custom seminorm returned a negative or NaN value");
    }
    return values;
}

} // namespace fapx
