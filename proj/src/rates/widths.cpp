#include "frechet_approx/rates/widths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frechet_approx/core/diagnostics.hpp"
#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/numeric.hpp"

namespace fapx {
namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw InputError(std::string(what) + " must be a positive finite number");
}

// Ceiling clamped to [1, int64 max]; widths beyond the integer range saturate.
void set_width(WidthResult& w, double x)
{
    if (x >= 9.2e18) {
        w.N_sufficient = std::numeric_limits<std::int64_t>::max();
        w.saturated = true;
        return;
    }
    w.N_sufficient = std::max<std::int64_t>(1, snapped_ceil(x));
}

} // namespace

int ell_epsilon(double epsilon)
{
    if (!(epsilon > 0.0) || !(epsilon <= 1.0))
        throw InputError("epsilon must lie in (0, 1]");
    double t = -std::log2(epsilon);
    const double r = std::round(t);
    if (std::abs(t - r) <= 1e-12)
        t = r;
    return static_cast<int>(std::ceil(t)) + 1;
}

void to_json(nlohmann::ordered_json& j, const WidthResult& w)
{
    j = nlohmann::ordered_json{{"theorem", w.theorem},
                               {"ell_epsilon", w.ell_epsilon},
                               {"N_sufficient", w.N_sufficient},
                               {"saturated", w.saturated},
                               {"threshold", w.threshold},
                               {"inputs", w.inputs}};
}

WidthResult width_monotonic(double epsilon, double C_f, const GrowthSequence& growth,
                            const std::map<int, RateFunction>& rates)
{
    require_positive(C_f, "C_f");
    WidthResult w;
    w.theorem = "monotonic";
    w.ell_epsilon = ell_epsilon(epsilon);
    auto it = rates.find(w.ell_epsilon);
    if (it == rates.end())
        throw InputError("width_monotonic: no rate given for ell_epsilon = " + std::to_string(w.ell_epsilon));
    const RateFunction& rate = it->second;
    const double M = growth.at(w.ell_epsilon);
    const double scale = std::ldexp(C_f * M, w.ell_epsilon);
    if (scale < 1.0)
        warn("width_monotonic: 2^ell C_f M_ell < 1; the closed-form minimum in the sufficiency argument assumes >= 1");
    w.threshold = std::min(rate.upper(), 1.0 / scale);
    set_width(w, rate.inverse(w.threshold));
    w.inputs = {{"epsilon", epsilon}, {"C_f", C_f}, {"growth", growth.describe()},
                {"M_ell", M}, {"rate", rate.describe()}};
    return w;
}

WidthResult width_bounded(double epsilon, double C_f, const GrowthSequence& growth, const RateFunction& rate)
{
    require_positive(C_f, "C_f");
    WidthResult w;
    w.theorem = "bounded";
    w.ell_epsilon = ell_epsilon(epsilon);
    const double M = growth.at(w.ell_epsilon);
    w.threshold = std::min(rate.upper(), std::ldexp(1.0, -w.ell_epsilon) / (C_f * M));
    set_width(w, rate.inverse(w.threshold));
    w.inputs = {{"epsilon", epsilon}, {"C_f", C_f}, {"growth", growth.describe()},
                {"M_ell", M}, {"rate", rate.describe()}};
    return w;
}

WidthResult width_exp_barron(double epsilon, double barron_norm, double c_ell, double C_ell,
                             double beta, int d)
{
    require_positive(barron_norm, "barron norm");
    require_positive(c_ell, "c_ell");
    require_positive(C_ell, "C_ell");
    if (!(beta > 0.0 && beta < 1.0))
        throw InputError("beta must lie in (0, 1)");
    if (d < 1)
        throw InputError("dimension must be at least 1");
    WidthResult w;
    w.theorem = "exp-barron";
    w.ell_epsilon = ell_epsilon(epsilon);
    // rate C_ell exp(-c_ell N^{beta/d}) inverted at 2^{-ell} / ||f||
    w.threshold = std::ldexp(1.0, -w.ell_epsilon) / barron_norm;
    const double log_arg = std::log(C_ell) + w.ell_epsilon * std::log(2.0) + std::log(barron_norm);
    if (log_arg <= 0.0)
        w.N_sufficient = 1;
    else
        set_width(w, std::pow(log_arg / c_ell, d / beta));
    w.inputs = {{"epsilon", epsilon}, {"barron_norm", barron_norm}, {"c_ell", c_ell},
                {"C_ell", C_ell}, {"beta", beta}, {"d", d}};
    return w;
}

WidthResult width_bandlimited(double epsilon, double barron_bl_norm, double omega)
{
    require_positive(barron_bl_norm, "Barron-bandlimited norm");
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw InputError("Omega must be nonnegative");
    WidthResult w;
    w.theorem = "bandlimited";
    w.ell_epsilon = ell_epsilon(epsilon);
    const double M = std::pow(japanese_bracket(omega), w.ell_epsilon);
    w.threshold = std::ldexp(1.0, -w.ell_epsilon) / (barron_bl_norm * M);
    set_width(w, 1.0 / (w.threshold * w.threshold));
    w.inputs = {{"epsilon", epsilon}, {"norm", barron_bl_norm}, {"omega", omega}, {"M_ell", M}};
    return w;
}

} // namespace fapx
