#include "frechet_approx/fit/ladder.hpp"


#include "frechet_approx/core/errors.hpp"

namespace fapx {
namespace {

void check_widths(std::span<const int> widths)
{
    if (widths.empty())
        throw InputError("candidate_ladder: widths must not be empty");
    for (std::size_t i = 0; i < widths.size(); ++i) {
        if (widths[i] < 1)
            throw InputError("candidate_ladder: widths must be positive");
        if (i > 0 && widths[i] <= widths[i - 1])
            throw InputError("candidate_ladder: widths must be strictly increasing");
    }
}

template <class Target>
std::vector<CosineCandidate> cosine_ladder(const Target& target, std::span<const int> widths, double budget,
                                           const CosineFitConfig& config)
{
    check_widths(widths);
    std::vector<CosineCandidate> out;
    for (int width : widths) {
        const SpectralFunction* warm = out.empty() ? nullptr : &out.back().network.network;
        auto [net, report] = fit_cosine(target, width, budget, config, warm);
        out.push_back({width, std::move(net), std::move(report)});
    }
    return out;
}

} // namespace

std::vector<CosineCandidate> candidate_ladder(const SpectralFunction& target, std::span<const int> widths,
                                              double budget, const CosineFitConfig& config)
{
    return cosine_ladder(target, widths, budget, config);
}

std::vector<CosineCandidate> candidate_ladder(const GridFunction& target, std::span<const int> widths,
                                              double budget, const CosineFitConfig& config)
{
    return cosine_ladder(target, widths, budget, config);
}

std::vector<BandlimitedFit> candidate_ladder(const BandlimitedTarget& target, std::span<const int> widths,
                                             const BandlimitedFitConfig& config)
{
    check_widths(widths);
    std::vector<BandlimitedFit> out;
    for (int width : widths) {
        std::span<const BandlimitedDictionaryAtom> warm;
        if (!out.empty())
            warm = out.back().atoms;
        out.push_back(fit_bandlimited(target, width, config, warm));
    }
    return out;
}

} // namespace fapx
