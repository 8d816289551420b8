#include "frechet_approx/core/box_domain.hpp"

#include <cmath>
#include <string>

#include "frechet_approx/core/errors.hpp"

namespace fapx {

BoxDomain::BoxDomain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.size() != upper_.size())
        throw InputError("BoxDomain: lower and upper differ in length");
    if (lower_.empty())
        throw InputError("BoxDomain: dimension must be at least 1");
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]) || !(lower_[j] < upper_[j]))
            throw InputError("BoxDomain: need finite lower < upper on axis " + std::to_string(j));
    }
}

BoxDomain BoxDomain::cube(std::size_t dim, double lo, double hi)
{
    return BoxDomain(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

double BoxDomain::volume() const noexcept
{
    double v = 1.0;
    for (std::size_t j = 0; j < lower_.size(); ++j)
        v *= upper_[j] - lower_[j];
    return v;
}

std::vector<double> BoxDomain::radius_vector() const
{
    std::vector<double> r(dim());
    for (std::size_t j = 0; j < dim(); ++j)
        r[j] = std::max(std::abs(lower_[j]), std::abs(upper_[j]));
    return r;
}

void to_json(nlohmann::ordered_json& j, const BoxDomain& box)
{
    j = nlohmann::ordered_json{{"lower", box.lower()}, {"upper", box.upper()}};
}

BoxDomain box_from_json(const nlohmann::ordered_json& j)
{
    try {
        return BoxDomain(j.at("lower").get<std::vector<double>>(),
                         j.at("upper").get<std::vector<double>>());
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("BoxDomain JSON: ") + e.what());
    }
}

} // namespace fapx
