#pragma once

#include <functional>
#include <span>

#include "frechet_approx/barron/fourier_profile.hpp"
#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/spectral_function.hpp"

namespace fapx {

using SymbolFn = std::function<Complex(std::span<const double>)>;

/// Op[f]u = F^{-1}(f . uhat) on the periodic grid of u: DFT, multiply by the
/// symbol at the angular grid frequencies 2 pi k / side, inverse DFT.
GridFunction apply_multiplier(const SymbolFn& symbol, const GridFunction& u);
GridFunction apply_multiplier(const SpectralFunction& symbol, const GridFunction& u);
GridFunction apply_multiplier(const FourierProfile& symbol, const GridFunction& u);

} // namespace fapx
