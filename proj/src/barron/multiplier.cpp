#include "frechet_approx/barron/multiplier.hpp"

#include <vector>

#include "frechet_approx/core/fft.hpp"
#include "frechet_approx/core/numeric.hpp"

namespace fapx {

GridFunction apply_multiplier(const SymbolFn& symbol, const GridFunction& u)
{
    GridFunction out = u;
    const auto& res = u.resolution();
    const std::size_t d = u.dim();
    auto data = out.samples();
    fft_inplace(data, res, FftDirection::Forward);
    std::vector<double> kappa(d);
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        std::size_t rem = flat;
        for (std::size_t j = d; j-- > 0;) {
            kappa[j] = 2.0 * kPi * signed_bin(static_cast<int>(rem % res[j]), res[j]) / u.domain().side(j);
            rem /= res[j];
        }
        data[flat] *= symbol(kappa);
    }
    fft_inplace(data, res, FftDirection::Backward);
    const double inv = 1.0 / static_cast<double>(data.size());
    for (auto& v : data)
        v *= inv;
    return out;
}

GridFunction apply_multiplier(const SpectralFunction& symbol, const GridFunction& u)
{
    return apply_multiplier(SymbolFn([&](std::span<const double> k) { return symbol.evaluate(k); }), u);
}

GridFunction apply_multiplier(const FourierProfile& symbol, const GridFunction& u)
{
    return apply_multiplier(SymbolFn([&](std::span<const double> k) { return symbol.value(k); }), u);
}

} // namespace fapx
