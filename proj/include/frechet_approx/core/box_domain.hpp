#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

namespace fapx {

/// Axis-aligned box [lower_0, upper_0] x ... x [lower_{d-1}, upper_{d-1}].
class BoxDomain {
public:
    BoxDomain(std::vector<double> lower, std::vector<double> upper);

    /// [lo, hi]^d
    static BoxDomain cube(std::size_t dim, double lo, double hi);

    std::size_t dim() const noexcept { return lower_.size(); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    double lower(std::size_t j) const { return lower_.at(j); }
    double upper(std::size_t j) const { return upper_.at(j); }
    double side(std::size_t j) const { return upper_.at(j) - lower_.at(j); }
    double volume() const noexcept;

    /// Per-axis sup |x_j| over the box.
    std::vector<double> radius_vector() const;

    bool operator==(const BoxDomain&) const = default;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

void to_json(nlohmann::ordered_json& j, const BoxDomain& box);
BoxDomain box_from_json(const nlohmann::ordered_json& j);

} // namespace fapx
