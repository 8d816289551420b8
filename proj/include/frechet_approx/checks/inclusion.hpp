#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frechet_approx/barron/fourier_profile.hpp"

namespace fapx {

struct InclusionEntry {
    double h = 0.0;
    bool finite = false;
    double norm = 0.0;                // Barron norm when finite
    std::optional<bool> analytic;     // closed-form verdict where known
    std::string note;
};

/// Finite/divergent verdicts for the Barron norm with weight exp(h |xi|^beta)
/// over a list of h. Deterministic for a given input.
struct InclusionReport {
    std::string function_id;
    double beta = 0.0;
    std::vector<InclusionEntry> entries;
    // Finite at some h implies finite at every smaller listed h.
    bool monotone = true;
    // Every entry with an analytic verdict agrees with it.
    bool agrees_with_analytic = true;
};

/// `profile == nullptr` stands for the zero function.
InclusionReport gs_to_barron_check(const FourierProfile* profile, double beta, const std::vector<double>& h_list);

void to_json(nlohmann::ordered_json& j, const InclusionReport& r);
std::string to_text(const InclusionReport& r);

} // namespace fapx
