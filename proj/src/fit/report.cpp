#include "frechet_approx/fit/report.hpp"

#include "frechet_approx/core/numeric.hpp"

namespace fapx {

void to_json(nlohmann::ordered_json& j, const FitReport& r)
{
    j = nlohmann::ordered_json{{"method", r.method},
                               {"width", r.width},
                               {"residuals", r.residuals},
                               {"parameters", r.parameters},
                               {"final_error", r.final_error},
                               {"seconds", r.seconds},
                               {"early_stop", r.early_stop},
                               {"budget_rescaled", r.budget_rescaled},
                               {"rescale_factor", r.rescale_factor},
                               {"conditioning_retries", r.conditioning_retries},
                               {"parseval_relative_gap", r.parseval_relative_gap}};
}

std::string fit_report_csv_header() { return "N,error,seconds"; }

std::string fit_report_csv_row(const FitReport& r)
{
    return std::to_string(r.width) + "," + shortest_repr(r.final_error) + "," + shortest_repr(r.seconds);
}

} // namespace fapx
