#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "frechet_approx/core/box_domain.hpp"
#include "frechet_approx/core/spectral_function.hpp"

namespace fapx {

/// Samples on the periodic tensor grid of a box: node k_j sits at
/// lower_j + k_j * side_j / resolution_j, the upper endpoint is excluded.
/// Storage is row-major (last axis fastest).
class GridFunction {
public:
    GridFunction(BoxDomain domain, std::vector<int> resolution, std::vector<Complex> samples);

    /// All-zero grid.
    GridFunction(BoxDomain domain, std::vector<int> resolution);

    const BoxDomain& domain() const noexcept { return domain_; }
    std::size_t dim() const noexcept { return domain_.dim(); }
    const std::vector<int>& resolution() const noexcept { return resolution_; }
    std::size_t size() const noexcept { return samples_.size(); }

    std::span<const Complex> samples() const noexcept { return samples_; }
    std::span<Complex> samples() noexcept { return samples_; }
    Complex operator[](std::size_t flat) const { return samples_[flat]; }
    Complex& operator[](std::size_t flat) { return samples_[flat]; }

    double spacing(std::size_t axis) const;
    double cell_volume() const;

    std::vector<int> unflatten(std::size_t flat) const;
    std::vector<double> node(std::size_t flat) const;

private:
    BoxDomain domain_;
    std::vector<int> resolution_;
    std::vector<Complex> samples_;
};

/// Default sample budget for `sample`.
inline constexpr std::size_t kDefaultSampleBudget = std::size_t{1} << 26;

/// Evaluates f at every grid node. Throws ResourceError above `max_samples`.
GridFunction sample(const SpectralFunction& f, std::span<const int> resolution,
                    std::size_t max_samples = kDefaultSampleBudget);

std::size_t grid_size(std::span<const int> resolution);

} // namespace fapx
