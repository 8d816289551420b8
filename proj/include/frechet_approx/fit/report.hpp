#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fapx {

/// Outcome of one greedy fit.
struct FitReport {
    std::string method;
    int width = 0;                               // requested N
    std::vector<double> residuals;               // residual norm after each accepted step
    std::vector<std::vector<double>> parameters; // selected parameters per step
    double final_error = 0.0;
    double seconds = 0.0;
    // Greedy stopped before reaching the requested width because no
    // candidate improved the residual.
    bool early_stop = false;
    // l1 budget projection applied to the final amplitudes.
    bool budget_rescaled = false;
    double rescale_factor = 1.0;
    int conditioning_retries = 0;
    // Spatial-vs-frequency residual agreement (bandlimited fits only).
    double parseval_relative_gap = 0.0;
};

void to_json(nlohmann::ordered_json& j, const FitReport& r);

/// CSV header "N,error,seconds" and the matching row for one report.
std::string fit_report_csv_header();
std::string fit_report_csv_row(const FitReport& r);

} // namespace fapx
