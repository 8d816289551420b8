#include "frechet_approx/core/multi_index.hpp"

#include <cmath>
#include <functional>

#include "frechet_approx/core/errors.hpp"

namespace fapx {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_)
        if (e < 0)
            throw InputError("MultiIndex: entries must be nonnegative");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries))
{
}

int MultiIndex::order() const noexcept
{
    int s = 0;
    for (int e : entries_)
        s += e;
    return s;
}

double MultiIndex::factorial() const
{
    if (order() <= 20) {
        double p = 1.0;
        for (int e : entries_)
            p *= fapx::factorial(e);
        return p;
    }
    return std::exp(log_factorial());
}

double MultiIndex::log_factorial() const
{
    double s = 0.0;
    for (int e : entries_)
        s += fapx::log_factorial(e);
    return s;
}

double factorial(int n)
{
    if (n < 0)
        throw InputError("factorial of a negative integer");
    if (n <= 20) {
        // exact in double: 20! < 2^63 and every partial product is representable
        double p = 1.0;
        for (int k = 2; k <= n; ++k)
            p *= k;
        return p;
    }
    return std::exp(std::lgamma(n + 1.0));
}

double log_factorial(int n)
{
    if (n < 0)
        throw InputError("factorial of a negative integer");
    return std::lgamma(n + 1.0);
}

std::vector<MultiIndex> multi_indices_of_order(std::size_t dim, int order)
{
    if (dim == 0)
        throw InputError("multi_indices_of_order: dimension must be positive");
    std::vector<MultiIndex> out;
    std::vector<int> current(dim, 0);
    std::function<void(std::size_t, int)> fill = [&](std::size_t axis, int remaining) {
        if (axis + 1 == dim) {
            current[axis] = remaining;
            out.emplace_back(current);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            current[axis] = k;
            fill(axis + 1, remaining - k);
        }
    };
    fill(0, order);
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t dim, int max_order)
{
    std::vector<MultiIndex> out;
    for (int k = 0; k <= max_order; ++k) {
        auto level = multi_indices_of_order(dim, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace fapx
