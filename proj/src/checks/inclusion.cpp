#include "frechet_approx/checks/inclusion.hpp"

#include <algorithm>
#include <sstream>

#include "frechet_approx/barron/barron_norm.hpp"
#include "frechet_approx/core/errors.hpp"

namespace fapx {
namespace {

// exp(h |xi|^beta) against exp(-|xi|^2 / (4a)).
std::optional<bool> gaussian_verdict(double a, double beta, double h)
{
    if (h == 0.0 || beta < 2.0)
        return true;
    if (beta == 2.0)
        return h < 1.0 / (4.0 * a);
    return false;
}

} // namespace

InclusionReport gs_to_barron_check(const FourierProfile* profile, double beta, const std::vector<double>& h_list)
{
    if (!(beta > 0.0))
        throw InputError("gs_to_barron_check: beta must be positive");
    InclusionReport rep;
    rep.function_id = profile ? profile->name() : "zero";
    rep.beta = beta;
    for (double h : h_list) {
        if (h < 0.0)
            throw InputError("gs_to_barron_check: h must be nonnegative");
        InclusionEntry e;
        e.h = h;
        if (!profile) {
            e.finite = true;
            e.analytic = true;
        } else {
            try {
                e.norm = barron_norm(*profile, BarronWeight{beta, h});
                e.finite = true;
            } catch (const DivergenceError& err) {
                e.note = err.what();
            }
            if (profile->kind() == FourierProfile::Kind::Gaussian)
                e.analytic = gaussian_verdict(profile->parameter(), beta, h);
            else if (profile->compact())
                e.analytic = true;
        }
        rep.entries.push_back(std::move(e));
    }
    for (const auto& a : rep.entries) {
        if (a.analytic && *a.analytic != a.finite)
            rep.agrees_with_analytic = false;
        for (const auto& b : rep.entries)
            if (a.finite && b.h < a.h && !b.finite)
                rep.monotone = false;
    }
    return rep;
}

void to_json(nlohmann::ordered_json& j, const InclusionReport& r)
{
    j = nlohmann::ordered_json{{"function", r.function_id}, {"beta", r.beta}};
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json row{{"h", e.h}, {"verdict", e.finite ? "finite" : "divergent"}};
        if (e.finite)
            row["norm"] = e.norm;
        if (e.analytic)
            row["analytic"] = *e.analytic ? "finite" : "divergent";
        if (!e.note.empty())
            row["note"] = e.note;
        entries.push_back(std::move(row));
    }
    j["monotone"] = r.monotone;
    j["agrees_with_analytic"] = r.agrees_with_analytic;
}

std::string to_text(const InclusionReport& r)
{
    std::ostringstream out;
    out << "Barron inclusion check for " << r.function_id << " (beta = " << r.beta << ")\n";
    for (const auto& e : r.entries) {
        out << "  h = " << e.h << ": " << (e.finite ? "finite" : "divergent");
        if (e.finite)
            out << ", norm " << e.norm;
        if (e.analytic)
            out << " (closed form: " << (*e.analytic ? "finite" : "divergent") << ")";
        out << "\n";
    }
    out << "  monotone in h: " << (r.monotone ? "yes" : "no") << "\n";
    return out.str();
}

} // namespace fapx
