// Runs the end-to-end acceptance checks and prints one PASS/FAIL line each.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "frechet_approx/barron/barron_norm.hpp"
#include "frechet_approx/barron/bounds.hpp"
#include "frechet_approx/barron/fourier_profile.hpp"
#include "frechet_approx/core/box_domain.hpp"
#include "frechet_approx/core/diagnostics.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/rates/rate_function.hpp"
#include "frechet_approx/rates/widths.hpp"

using namespace fapx;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

fs::path work_dir()
{
    const fs::path dir = fs::temp_directory_path() / "fapx_acceptance";
    fs::create_directories(dir);
    return dir;
}

Json read_json(const fs::path& p)
{
    std::ifstream in(p);
    return Json::parse(in);
}

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(4);
    s << v;
    return s.str();
}

// Runs rate-study and returns its JSON summary; throws on a non-zero exit.
Json rate_study(const Json& config, const std::string& tag)
{
    const fs::path dir = work_dir();
    Json cfg = config;
    cfg["csv"] = (dir / (tag + ".csv")).string();
    cfg["json"] = (dir / (tag + ".json")).string();
    std::ostringstream out, err;
    const int code = cli::cmd_rate_study(cfg, out, err);
    if (code != cli::kSuccess)
        throw std::runtime_error("rate-study exited " + std::to_string(code) + ": " + err.str());
    return read_json(dir / (tag + ".json"));
}

Outcome monte_carlo_rate()
{
    const Json d1 = rate_study(Json{{"target", {{"kind", "bandlimited"}}},
                                    {"widths", {8, 16, 32, 64, 128, 256, 512}},
                                    {"family", "power"}},
                               "mc_d1");
    const Json d2 = rate_study(Json{{"target", {{"kind", "bandlimited"},
                                                {"profile", {{"name", "raised_cosine"}, {"dim", 2}, {"omega", kPi}}},
                                                {"points", 64}}},
                                    {"widths", {8, 16, 32, 64, 128, 256}},
                                    {"family", "power"}},
                               "mc_d2");
    const double r1 = d1["fits"][0]["exponent"].get<double>();
    const double r2 = d2["fits"][0]["exponent"].get<double>();
    const double gap = std::max(d1["parseval_relative_gap"].get<double>(), d2["parseval_relative_gap"].get<double>());
    return {r1 >= 0.45 && r2 >= 0.40 && gap <= 1e-6,
            "d=1 r=" + fmt(r1) + " (need >= 0.45), d=2 r=" + fmt(r2) + " (need >= 0.40), parseval gap " + fmt(gap)};
}

Outcome exponential_rate()
{
    const Json target = Json::parse(
        R"({"kind":"cosine","profile":{"name":"gaussian","dim":1,"a":50,"center":[0.5]},"domain":{"lower":[0.0],"upper":[1.0]}})");
    const Json s = rate_study(Json{{"target", target},
                                   {"widths", {2, 4, 8, 16, 32, 64}},
                                   {"orders", {0, 1, 2}},
                                   {"family", "sexp"},
                                   {"gamma", 0.5}},
                              "exp_rate");
    // The target must lie in the weighted Barron space the rate refers to.
    const double norm = barron_norm(FourierProfile::gaussian(1, 50.0), BarronWeight{0.5, 1.0});
    bool ok = std::isfinite(norm);
    std::string detail = "R^2";
    for (const Json& fit : s["fits"]) {
        const double r2 = fit.value("r_squared", 0.0);
        ok = ok && r2 >= 0.9;
        detail += " m=" + std::to_string(fit["order"].get<int>()) + ":" + fmt(r2);
    }
    return {ok, detail + " (need >= 0.9 each), Barron norm " + fmt(norm)};
}

Outcome frechet_validation()
{
    std::ostringstream out, err;
    const int code = cli::cmd_frechet_validate(Json{{"epsilon", {0.5, 0.25, 0.125}}}, out, err);
    if (code != cli::kSuccess)
        return {false, "frechet-validate exited " + std::to_string(code) + ": " + err.str()};
    const Json rep = Json::parse(out.str());
    std::string detail = "norm " + fmt(rep["barron_bl_norm"].get<double>()) + ", margins";
    bool ok = rep["passed"].get<bool>();
    for (const Json& r : rep["results"]) {
        ok = ok && r["passed"].get<bool>();
        detail += " eps=" + fmt(r["epsilon"].get<double>()) + ":" + fmt(r["margin"].get<double>());
    }
    return {ok, detail};
}

Outcome counterexample()
{
    std::ostringstream out, err;
    const int code = cli::cmd_counterexample(Json::object(), out, err);
    bool ok = code == cli::kSuccess;
    const BarronWeight w{0.5, 2.0};
    const double volume = 2.0 * kPi;
    double previous = 0.0;
    long long threshold = 0;
    for (long long n = 1; n <= 1024; ++n) {
        const CounterexampleBound b = counterexample_lower_bound(n, w, volume);
        if (b.trivial)
            continue;
        if (threshold == 0)
            threshold = n;
        else
            ok = ok && b.value >= previous;
        previous = b.value;
    }
    const double at_1024 = counterexample_lower_bound(1024, w, volume).value;
    ok = ok && at_1024 > 1e3;
    return {ok, "derivative norms n^k exact for n<=32, k<=3 (exit " + std::to_string(code) +
                    "); bound non-decreasing from n=" + std::to_string(threshold) + ", bound(1024)=" + fmt(at_1024)};
}

Outcome width_arithmetic()
{
    const GrowthSequence one = GrowthSequence::constant(1.0);
    const RateFunction mc = RateFunction::power(1.0, 0.5);
    const RateFunction sexp = RateFunction::stretched_exp(1.0, 1.0, 0.5);
    const std::int64_t huge = width_bounded(0.25, 1e6, one, mc).N_sufficient;
    const std::vector<std::pair<std::string, std::pair<std::int64_t, std::int64_t>>> cases{
        {"ell(0.25)", {ell_epsilon(0.25), 3}},
        {"ell(1)", {ell_epsilon(1.0), 1}},
        {"ell(0.1)", {ell_epsilon(0.1), 5}},
        {"monotonic sexp", {width_monotonic(0.5, 1.0, one, {{2, sexp}}).N_sufficient, 2}},
        {"monotonic r(1) branch", {width_monotonic(0.5, 1e-3, one, {{2, sexp}}).N_sufficient, 1}},
        {"monotonic power", {width_monotonic(0.25, 2.0, one, {{3, mc}}).N_sufficient, 256}},
        {"bounded", {width_bounded(0.25, 1.0, one, mc).N_sufficient, 64}},
        {"bounded eps=1", {width_bounded(1.0, 1.0, one, mc).N_sufficient, 4}},
        {"bounded C_f=1e6", {huge, 64000000000000LL}},
        {"exp clamp", {width_exp_barron(0.5, 0.1, 1.0, 1.0, 0.5, 1).N_sufficient, 1}},
        {"exp d=1", {width_exp_barron(0.5, 1.0, 1.0, 1.0, 0.5, 1).N_sufficient, 2}},
        {"exp d=2", {width_exp_barron(0.5, 1.0, 1.0, 1.0, 0.5, 2).N_sufficient, 4}},
        {"bandlimited", {width_bandlimited(0.5, 1.0, 1.0).N_sufficient, 64}},
        {"bandlimited omega=0", {width_bandlimited(0.5, 1.0, 0.0).N_sufficient, 16}},
        {"bandlimited 2x norm", {width_bandlimited(0.5, 2.0, 0.0).N_sufficient, 64}},
    };
    std::string failed;
    for (const auto& [name, v] : cases)
        if (v.first != v.second)
            failed += " " + name + "=" + std::to_string(v.first) + "!=" + std::to_string(v.second);
    return {failed.empty(), failed.empty() ? std::to_string(cases.size()) + " examples reproduced exactly"
                                           : "mismatches:" + failed};
}

Outcome embedding()
{
    const EmbeddingReport rep = check_embedding(FourierProfile::gaussian(1, 1.0), BarronWeight{0.5, 1.0},
                                                BoxDomain::cube(1, -1.0, 1.0), 6);
    double worst = 0.0;
    for (double r : rep.max_ratio)
        worst = std::max(worst, r);
    return {rep.passed(), std::to_string(rep.violations.size()) + " violations, max ratio " + fmt(worst) +
                              ", smallest constant " + fmt(rep.smallest_constant) + " vs norm " + fmt(rep.barron_norm)};
}

Outcome property_suites()
{
    doctest::Context ctx;
    ctx.setOption("minimal", true);
    ctx.setOption("no-intro", true);
    ctx.setOption("no-version", true);
    const int failures = ctx.run();
    return {failures == 0, failures == 0 ? "all randomized property cases passed" : "property failures reported above"};
}

} // namespace

int main()
{
    set_warning_sink([](std::string_view) {});
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Monte-Carlo rate", monte_carlo_rate},
        {"exponential rate", exponential_rate},
        {"Frechet validation", frechet_validation},
        {"counterexample exactness", counterexample},
        {"width arithmetic", width_arithmetic},
        {"derivative embedding", embedding},
        {"property suites", property_suites},
    };
    bool all = true;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << index << " (" << name << "): " << o.detail
                  << " [" << fmt(secs) << " s]" << std::endl;
    }
    return all ? 0 : 1;
}
