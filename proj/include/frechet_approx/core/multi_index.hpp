#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fapx {

class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    std::size_t dim() const noexcept { return entries_.size(); }
    int operator[](std::size_t j) const { return entries_.at(j); }
    const std::vector<int>& entries() const noexcept { return entries_; }

    int order() const noexcept;

    // Product of entry factorials. Exact up to order 20, exp(log_factorial)
    // beyond that.
    double factorial() const;
    double log_factorial() const;

    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<int> entries_;
};

/// All multi-indices of length `dim` with order exactly `order`, in
/// lexicographically decreasing order of the first entry.
std::vector<MultiIndex> multi_indices_of_order(std::size_t dim, int order);

/// All multi-indices of length `dim` with order <= `max_order`, grouped by order.
std::vector<MultiIndex> multi_indices_up_to(std::size_t dim, int max_order);

/// n! for n <= 20 exactly; via lgamma beyond.
double factorial(int n);
double log_factorial(int n);

} // namespace fapx
