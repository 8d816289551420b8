#include "frechet_approx/core/grid_function.hpp"

#include <limits>
#include <string>

#include "frechet_approx/core/errors.hpp"

namespace fapx {

std::size_t grid_size(std::span<const int> resolution)
{
    std::size_t n = 1;
    for (int r : resolution) {
        if (r <= 0)
            throw InputError("grid resolution must be positive");
        if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(r))
            throw ResourceError("grid sample count overflows");
        n *= static_cast<std::size_t>(r);
    }
    return n;
}

GridFunction::GridFunction(BoxDomain domain, std::vector<int> resolution, std::vector<Complex> samples)
    : domain_(std::move(domain)), resolution_(std::move(resolution)), samples_(std::move(samples))
{
    if (resolution_.size() != domain_.dim())
        throw InputError("GridFunction: resolution length differs from domain dimension");
    if (samples_.size() != grid_size(resolution_))
        throw InputError("GridFunction: sample count differs from product of resolutions");
}

GridFunction::GridFunction(BoxDomain domain, std::vector<int> resolution)
    : domain_(std::move(domain)), resolution_(std::move(resolution))
{
    if (resolution_.size() != domain_.dim())
        throw InputError("GridFunction: resolution length differs from domain dimension");
    samples_.assign(grid_size(resolution_), Complex{0.0, 0.0});
}

double GridFunction::spacing(std::size_t axis) const
{
    return domain_.side(axis) / resolution_.at(axis);
}

double GridFunction::cell_volume() const
{
    double v = 1.0;
    for (std::size_t j = 0; j < dim(); ++j)
        v *= spacing(j);
    return v;
}

std::vector<int> GridFunction::unflatten(std::size_t flat) const
{
    std::vector<int> k(dim());
    for (std::size_t j = dim(); j-- > 0;) {
        k[j] = static_cast<int>(flat % static_cast<std::size_t>(resolution_[j]));
        flat /= static_cast<std::size_t>(resolution_[j]);
    }
    return k;
}

std::vector<double> GridFunction::node(std::size_t flat) const
{
    auto k = unflatten(flat);
    std::vector<double> x(dim());
    for (std::size_t j = 0; j < dim(); ++j)
        x[j] = domain_.lower(j) + k[j] * (domain_.side(j) / resolution_[j]);
    return x;
}

GridFunction sample(const SpectralFunction& f, std::span<const int> resolution, std::size_t max_samples)
{
    if (resolution.size() != f.dim())
        throw InputError("sample: resolution length differs from domain dimension");
    for (int r : resolution)
        if (r < 2)
            throw InputError("sample: resolution must be at least 2 per axis");
    std::size_t n = grid_size(resolution);
    if (n > max_samples)
        throw ResourceError("sample: " + std::to_string(n) + " samples exceed budget of " +
                            std::to_string(max_samples));
    GridFunction g(f.domain(), std::vector<int>(resolution.begin(), resolution.end()));
    for (std::size_t i = 0; i < n; ++i) {
        auto x = g.node(i);
        g[i] = f.evaluate(x);
    }
    return g;
}

} // namespace fapx
