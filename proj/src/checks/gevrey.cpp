#include "frechet_approx/checks/gevrey.hpp"

#include <cmath>
#include <sstream>

#include "frechet_approx/core/errors.hpp"

namespace fapx {

GevreyReport gevrey_gaussian_demo(const std::vector<double>& radius, int max_order, int points_per_axis)
{
    if (radius.empty() || max_order < 0)
        throw InputError("gevrey_gaussian_demo: need a radius per axis and max_order >= 0");
    std::vector<double> lower, upper;
    for (double r : radius) {
        if (!(r > 0.0) || !std::isfinite(r))
            throw InputError("gevrey_gaussian_demo: radii must be positive and finite");
        lower.push_back(-r);
        upper.push_back(r);
    }
    const BoxDomain box(lower, upper);
    GevreyReport rep;
    rep.radius = radius;
    rep.max_order = max_order;
    for (const MultiIndex& alpha : multi_indices_up_to(radius.size(), max_order)) {
        const HermiteCheck c = gaussian_hermite_check(alpha, box, points_per_axis);
        rep.rows.push_back({alpha.entries(), c.max_ratio});
        rep.all_within = rep.all_within && c.holds;
    }
    return rep;
}

void to_json(nlohmann::ordered_json& j, const GevreyReport& r)
{
    j = nlohmann::ordered_json{{"radius", r.radius}, {"max_order", r.max_order}};
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"alpha", row.alpha}, {"max_ratio", row.max_ratio}});
    j["all_within"] = r.all_within;
}

std::string to_text(const GevreyReport& r)
{
    std::ostringstream out;
    out << "Self-weighted derivative bound for exp(-|x|^2), orders <= " << r.max_order << "\n";
    for (const auto& row : r.rows) {
        out << "  alpha = (";
        for (std::size_t j = 0; j < row.alpha.size(); ++j)
            out << (j ? "," : "") << row.alpha[j];
        out << "): max ratio " << row.max_ratio << "\n";
    }
    out << "  all ratios <= 1: " << (r.all_within ? "yes" : "no") << "\n";
    out << "  Compactly supported bumps cannot satisfy a bound of this self-weighted form;\n"
           "  that statement is qualitative and is not tested here.\n";
    return out.str();
}

} // namespace fapx
