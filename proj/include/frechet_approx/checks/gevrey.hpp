#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "frechet_approx/barron/bounds.hpp"

namespace fapx {

struct GevreyRow {
    std::vector<int> alpha;
    double max_ratio = 0.0;   // sup |d^alpha f| / (bound |f|) on the grid
};

/// Tabulation of the self-weighted derivative bound for f = exp(-|x|^2) on
/// the box prod_j [-R_j, R_j].
struct GevreyReport {
    std::vector<double> radius;
    int max_order = 0;
    std::vector<GevreyRow> rows;
    bool all_within = true;
};

GevreyReport gevrey_gaussian_demo(const std::vector<double>& radius, int max_order, int points_per_axis = 10001);

void to_json(nlohmann::ordered_json& j, const GevreyReport& r);
std::string to_text(const GevreyReport& r);

} // namespace fapx
