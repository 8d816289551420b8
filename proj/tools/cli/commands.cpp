#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "frechet_approx/barron/barron_norm.hpp"
#include "frechet_approx/barron/bounds.hpp"
#include "frechet_approx/barron/fourier_profile.hpp"
#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/core/parallel.hpp"
#include "frechet_approx/fit/ladder.hpp"
#include "frechet_approx/frechet/frechet.hpp"
#include "frechet_approx/rates/fit_rate.hpp"
#include "frechet_approx/rates/widths.hpp"
#include "frechet_approx/seminorms/sobolev.hpp"

namespace fapx::cli {
namespace {

using Json = nlohmann::ordered_json;

template <class T>
T required(const Json& config, const char* key)
{
    if (!config.contains(key))
        throw InputError(std::string("missing required setting '") + key + "'");
    try {
        return config.at(key).get<T>();
    } catch (const Json::exception&) {
        throw InputError(std::string("setting '") + key + "' has the wrong type");
    }
}

template <class T>
T optional_value(const Json& config, const char* key, T fallback)
{
    if (!config.contains(key) || config.at(key).is_null())
        return fallback;
    try {
        return config.at(key).get<T>();
    } catch (const Json::exception&) {
        throw InputError(std::string("setting '") + key + "' has the wrong type");
    }
}

void check_schema(const Json& config)
{
    if (!config.is_object())
        throw InputError("configuration must be a JSON object");
    if (config.contains("schema_version") && config.at("schema_version") != kSchemaVersion)
        throw InputError("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
}

std::size_t workers_for(const Json& config)
{
    return optional_value(config, "serial", false) ? 1 : default_worker_count();
}

std::vector<double> number_list(const Json& config, const char* key, std::vector<double> fallback)
{
    if (!config.contains(key))
        return fallback;
    if (config.at(key).is_number())
        return {config.at(key).get<double>()};
    return required<std::vector<double>>(config, key);
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot open '" + path + "' for writing");
    f << content;
    if (!f)
        throw InputError("failed writing '" + path + "'");
}

// Runs a command body and maps exceptions onto exit codes.
template <class Body>
int guarded(const char* name, std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const InputError& e) {
        err << name << ": " << e.what() << "\n";
        return kConfigError;
    } catch (const PreconditionError& e) {
        err << name << ": " << e.what() << "\n";
        return kConfigError;
    } catch (const DivergenceError& e) {
        err << name << ": " << e.what() << "\n";
        return kConfigError;
    } catch (const Json::exception& e) {
        err << name << ": malformed configuration: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << name << ": " << e.what() << "\n";
        return kFitterError;
    }
}

GrowthSequence growth_from(const Json& config)
{
    if (config.contains("growth"))
        return GrowthSequence::parse(required<std::string>(config, "growth"));
    return GrowthSequence::constant(optional_value(config, "m", 1.0));
}

FourierProfile default_bandlimited_profile() { return FourierProfile::raised_cosine(1, kPi); }

} // namespace

int cmd_width(const Json& config, std::ostream& out, std::ostream& err)
{
    return guarded("width", err, [&] {
        check_schema(config);
        const auto theorem = required<std::string>(config, "theorem");
        const double eps = required<double>(config, "epsilon");
        WidthResult w;
        if (theorem == "monotonic") {
            std::map<int, RateFunction> rates;
            if (config.contains("rates")) {
                for (const auto& [k, v] : config.at("rates").items())
                    rates.emplace(std::stoi(k), RateFunction::parse(v.get<std::string>()));
            } else {
                rates.emplace(ell_epsilon(eps), RateFunction::parse(required<std::string>(config, "rate")));
            }
            w = width_monotonic(eps, required<double>(config, "cf"), growth_from(config), rates);
        } else if (theorem == "bounded") {
            w = width_bounded(eps, required<double>(config, "cf"), growth_from(config),
                              RateFunction::parse(required<std::string>(config, "rate")));
        } else if (theorem == "exp-barron") {
            w = width_exp_barron(eps, required<double>(config, "norm"), required<double>(config, "c_ell"),
                                 required<double>(config, "C_ell"), required<double>(config, "beta"),
                                 optional_value(config, "d", 1));
        } else if (theorem == "bandlimited") {
            w = width_bandlimited(eps, required<double>(config, "norm"), required<double>(config, "omega"));
        } else {
            throw InputError("unknown theorem '" + theorem + "' (monotonic, bounded, exp-barron, bandlimited)");
        }
        Json j = w;
        const std::string text = j.dump(2) + "\n";
        if (config.contains("output"))
            write_file(required<std::string>(config, "output"), text);
        out << text;
        return kSuccess;
    });
}

namespace {

struct StudyRow {
    int N;
    int order;
    double error;
    double seconds;
};

BoxDomain domain_from(const Json& target, std::size_t dim)
{
    if (target.contains("domain"))
        return box_from_json(target.at("domain"));
    return BoxDomain::cube(dim, 0.0, 1.0);
}

Json fit_rows(const std::vector<StudyRow>& rows, int order, RateFamily family, double gamma)
{
    std::vector<RatePoint> pts;
    for (const auto& r : rows)
        if (r.order == order)
            pts.push_back({static_cast<double>(r.N), r.error});
    Json j{{"order", order}};
    try {
        const RateFit fit = fit_rate(pts, family, gamma);
        j["family"] = family == RateFamily::Power ? "power" : "sexp";
        j["constant"] = fit.constant;
        j["exponent"] = fit.exponent;
        if (family == RateFamily::StretchedExp)
            j["gamma"] = fit.gamma;
        j["r_squared"] = fit.r_squared;
        j["rms_residual"] = fit.rms_residual;
    } catch (const InputError& e) {
        j["fit"] = nullptr;
        j["note"] = e.what();
    }
    return j;
}

} // namespace

int cmd_rate_study(const Json& config, std::ostream& out, std::ostream& err)
{
    return guarded("rate-study", err, [&] {
        check_schema(config);
        const Json target = required<Json>(config, "target");
        const auto kind = required<std::string>(target, "kind");
        const auto widths = required<std::vector<int>>(config, "widths");
        if (widths.size() < 4)
            throw InputError("rate-study needs at least four widths");
        const auto orders = config.contains("orders") ? required<std::vector<int>>(config, "orders") : std::vector<int>{0};
        if (orders.empty())
            throw InputError("rate-study needs at least one order");
        for (int m : orders)
            if (m < 0 || m > kDefaultMaxSobolevOrder)
                throw InputError("orders must lie in [0, " + std::to_string(kDefaultMaxSobolevOrder) + "]");
        const auto family_name = optional_value<std::string>(config, "family", kind == "bandlimited" ? "power" : "sexp");
        if (family_name != "power" && family_name != "sexp")
            throw InputError("family must be 'power' or 'sexp'");
        const RateFamily family = family_name == "power" ? RateFamily::Power : RateFamily::StretchedExp;
        const double gamma = optional_value(config, "gamma", 0.5);
        const bool timing = !optional_value(config, "no_timing", false);
        const Json fitter = optional_value<Json>(config, "fitter", Json::object());
        const std::size_t workers = workers_for(config);
        constexpr double kShortCircuit = 1e-8;

        std::vector<StudyRow> rows;
        Json extra = Json::object();
        if (kind == "bandlimited") {
            const FourierProfile profile = target.contains("profile") ? profile_from_json(target.at("profile"))
                                                                      : default_bandlimited_profile();
            const double omega = optional_value(target, "omega", profile.support_halfwidth());
            const int points = optional_value(target, "points", profile.dim() == 1 ? 1024 : 64);
            const BandlimitedTarget grid = BandlimitedTarget::from_profile(profile, omega, points);
            BandlimitedFitConfig fc = bandlimited_config_from_json(fitter);
            fc.workers = workers;
            const double norm = grid.l2_norm(grid.samples());
            std::vector<BandlimitedDictionaryAtom> warm;
            double worst_gap = 0.0;
            for (int N : widths) {
                BandlimitedFit fit = fit_bandlimited(grid, N, fc, warm);
                warm = fit.atoms;
                worst_gap = std::max(worst_gap, fit.report.parseval_relative_gap);
                for (int m : orders)
                    rows.push_back({N, m, grid.bessel_norm(fit.residual, m), timing ? fit.report.seconds : 0.0});
                if (fit.report.final_error <= kShortCircuit * norm)
                    break;
            }
            extra["parseval_relative_gap"] = worst_gap;
        } else if (kind == "cosine" || kind == "atoms") {
            SpectralFunction f = kind == "atoms"
                                     ? spectral_function_from_json(required<Json>(target, "function"))
                                     : [&] {
                                           const FourierProfile p = profile_from_json(required<Json>(target, "profile"));
                                           return discretize_profile(p, domain_from(target, p.dim()));
                                       }();
            const double budget = optional_value(config, "budget", std::numeric_limits<double>::infinity());
            for (int m : orders) {
                CosineFitConfig fc = cosine_config_from_json(fitter);
                fc.order = m;
                fc.workers = workers;
                const double norm = sobolev_norm(f, m);
                std::optional<SpectralFunction> previous;
                for (int N : widths) {
                    auto [net, report] = fit_cosine(f, N, budget, fc, previous ? &*previous : nullptr);
                    rows.push_back({N, m, report.final_error, timing ? report.seconds : 0.0});
                    previous = std::move(net.network);
                    if (report.final_error <= kShortCircuit * norm)
                        break;
                }
            }
        } else {
            throw InputError("target kind must be 'bandlimited', 'cosine' or 'atoms'");
        }

        std::sort(rows.begin(), rows.end(), [](const StudyRow& a, const StudyRow& b) {
            return a.N != b.N ? a.N < b.N : a.order < b.order;
        });
        std::string csv = "N,order,error,seconds\n";
        for (const auto& r : rows)
            csv += std::to_string(r.N) + "," + std::to_string(r.order) + "," + shortest_repr(r.error) + "," +
                   shortest_repr(r.seconds) + "\n";
        Json summary{{"target", target}, {"widths", widths}, {"orders", orders}, {"fits", Json::array()}};
        for (int m : orders)
            summary["fits"].push_back(fit_rows(rows, m, family, gamma));
        for (auto& [k, v] : extra.items())
            summary[k] = v;
        const std::string json_text = summary.dump(2) + "\n";

        if (config.contains("csv")) {
            write_file(required<std::string>(config, "csv"), csv);
            if (config.contains("json"))
                write_file(required<std::string>(config, "json"), json_text);
            else
                out << json_text;
        } else {
            out << csv;
            if (config.contains("json"))
                write_file(required<std::string>(config, "json"), json_text);
        }
        return kSuccess;
    });
}

int cmd_frechet_validate(const Json& config, std::ostream& out, std::ostream& err)
{
    return guarded("frechet-validate", err, [&] {
        check_schema(config);
        const auto epsilons = number_list(config, "epsilon", {0.5, 0.25, 0.125});
        const FourierProfile profile = config.contains("profile") ? profile_from_json(config.at("profile"))
                                                                  : default_bandlimited_profile();
        if (!profile.compact())
            throw InputError("frechet-validate needs a compactly supported profile");
        const double omega = optional_value(config, "omega", profile.support_halfwidth());
        const int points = optional_value(config, "points", profile.dim() == 1 ? 1024 : 64);
        const int max_atoms = optional_value(config, "max_atoms", 256);
        if (max_atoms < 1)
            throw InputError("max_atoms must be at least 1");
        BandlimitedFitConfig fc = bandlimited_config_from_json(optional_value<Json>(config, "fitter", Json::object()));
        fc.workers = workers_for(config);

        BandlimitedNormConfig nc;
        nc.support_points = optional_value(config, "norm_support_points", 0);
        nc.pad = optional_value(config, "norm_pad", 0);
        const double norm = barron_bl_norm(profile, nc);
        const BandlimitedTarget grid = BandlimitedTarget::from_profile(profile, omega, points);

        Json report{{"profile", profile}, {"omega", omega}, {"barron_bl_norm", norm}, {"results", Json::array()}};
        bool all_passed = true;
        std::vector<std::string> failures;
        for (double eps : epsilons) {
            const WidthResult w = width_bandlimited(eps, norm, omega);
            const int L = w.ell_epsilon + 2;
            const int n_fit = static_cast<int>(std::min<std::int64_t>(w.N_sufficient, max_atoms));
            const BandlimitedFit fit = fit_bandlimited(grid, n_fit, fc);
            // Bessel-form H^ell(R^d) norms of the residual; each bounds the
            // H^ell norm on any subdomain from above.
            std::vector<double> p;
            for (int ell = 0; ell <= L; ++ell)
                p.push_back(grid.bessel_norm(fit.residual, ell));
            const DistanceResult d = frechet_series(p);
            const double total = d.value + d.tail_bound;
            const bool passed = total < eps;
            all_passed = all_passed && passed;
            report["results"].push_back(Json{{"epsilon", eps},
                                             {"ell_epsilon", w.ell_epsilon},
                                             {"L", L},
                                             {"N_sufficient", w.N_sufficient},
                                             {"N_fitted", fit.atoms.size()},
                                             {"early_stop", fit.report.early_stop},
                                             {"seminorms", p},
                                             {"value", d.value},
                                             {"tail_bound", d.tail_bound},
                                             {"margin", eps - total},
                                             {"passed", passed}});
            if (!passed) {
                std::ostringstream msg;
                msg << "epsilon " << shortest_repr(eps) << ": distance + tail = " << shortest_repr(total)
                    << " is not below epsilon";
                if (static_cast<std::int64_t>(fit.atoms.size()) < w.N_sufficient)
                    msg << "; fitter-limited: " << fit.atoms.size() << " atoms fitted of the " << w.N_sufficient
                        << " the width formula allows";
                failures.push_back(msg.str());
            }
        }
        report["passed"] = all_passed;
        const std::string text = report.dump(2) + "\n";
        if (config.contains("output"))
            write_file(required<std::string>(config, "output"), text);
        out << text;
        for (const auto& f : failures)
            err << "frechet-validate: " << f << "\n";
        return all_passed ? kSuccess : kValidationFailure;
    });
}

int cmd_counterexample(const Json& config, std::ostream& out, std::ostream& err)
{
    return guarded("counterexample", err, [&] {
        check_schema(config);
        std::vector<long long> ns, ks;
        if (config.contains("n"))
            ns = required<std::vector<long long>>(config, "n");
        else
            for (long long n = 1; n <= 32; ++n)
                ns.push_back(n);
        ks = config.contains("k") ? required<std::vector<long long>>(config, "k") : std::vector<long long>{1, 2, 3};
        const BarronWeight weight{optional_value(config, "beta", 0.5), optional_value(config, "c", 2.0)};
        for (long long n : ns)
            if (n < 1)
                throw InputError("n values must be at least 1");
        for (long long k : ks)
            if (k < 1 || k > kDefaultMaxSobolevOrder)
                throw InputError("k values must lie in [1, " + std::to_string(kDefaultMaxSobolevOrder) + "]");

        // f_n = cos(n x) / sqrt(pi) on [0, 2 pi], unit L2 norm.
        const BoxDomain U = BoxDomain::cube(1, 0.0, 2.0 * kPi);
        std::string csv = "n,k,l2_norm,derivative_norm,barron_lower_bound\n";
        bool exact = true;
        for (long long n : ns) {
            const double half = 0.5 / std::sqrt(kPi);
            const SpectralFunction f(U, {Atom{half, {static_cast<double>(n)}}, Atom{half, {-static_cast<double>(n)}}});
            const double l2 = sobolev_norm(f, 0);
            const CounterexampleBound bound = counterexample_lower_bound(n, weight, U.volume());
            for (long long k : ks) {
                const double dn = derivative_norm(f, MultiIndex{static_cast<int>(k)});
                const double expected = std::pow(static_cast<double>(n), static_cast<double>(k));
                if (std::abs(dn / l2 - expected) > 1e-9 * expected) {
                    exact = false;
                    err << "counterexample: n=" << n << " k=" << k << " derivative ratio " << shortest_repr(dn / l2)
                        << " differs from n^k\n";
                }
                csv += std::to_string(n) + "," + std::to_string(k) + "," + shortest_repr(l2) + "," +
                       shortest_repr(dn) + "," + shortest_repr(bound.value) + "\n";
            }
        }
        if (config.contains("csv"))
            write_file(required<std::string>(config, "csv"), csv);
        else
            out << csv;
        return exact ? kSuccess : kValidationFailure;
    });
}

namespace {

struct CsvRow {
    double N;
    int order;
    double error;
};

std::vector<CsvRow> read_study_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != "N,order,error,seconds")
        throw InputError("'" + path + "' does not start with the header N,order,error,seconds");
    std::vector<CsvRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ','))
            fields.push_back(field);
        if (fields.size() != 4)
            throw InputError("line " + std::to_string(line_no) + " does not have four fields");
        try {
            std::size_t used = 0;
            CsvRow r{std::stod(fields[0], &used), 0, 0.0};
            if (used != fields[0].size())
                throw std::invalid_argument("N");
            r.order = std::stoi(fields[1], &used);
            if (used != fields[1].size())
                throw std::invalid_argument("order");
            r.error = std::stod(fields[2], &used);
            if (used != fields[2].size())
                throw std::invalid_argument("error");
            (void)std::stod(fields[3]);
            rows.push_back(r);
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(line_no) + " is not numeric");
        }
    }
    if (rows.empty())
        throw InputError("'" + path + "' has no data rows");
    return rows;
}

} // namespace

int cmd_emit_plots(const Json& config, std::ostream& out, std::ostream& err)
{
    return guarded("emit-plots", err, [&] {
        check_schema(config);
        namespace fs = std::filesystem;
        const fs::path csv = required<std::string>(config, "csv");
        const double gamma = optional_value(config, "gamma", 0.5);
        const auto rows = read_study_csv(csv.string());
        const fs::path script = config.contains("script") ? fs::path(required<std::string>(config, "script"))
                                                          : fs::path(csv).replace_extension(".gp");
        const fs::path script_dir = fs::absolute(script).parent_path();
        const std::string data = fs::relative(fs::absolute(csv), script_dir).generic_string();
        const std::string stem = script.stem().string();

        std::vector<int> orders;
        for (const auto& r : rows)
            if (std::find(orders.begin(), orders.end(), r.order) == orders.end())
                orders.push_back(r.order);
        std::sort(orders.begin(), orders.end());

        std::ostringstream gp;
        gp << "# gnuplot script; run from this directory with: gnuplot " << script.filename().string() << "\n"
           << "set datafile separator ','\n"
           << "set key top right\n"
           << "set grid\n"
           << "set terminal pngcairo size 900,600\n";
        for (int m : orders) {
            const std::string select = "($2 == " + std::to_string(m) + " ? $3 : 1/0)";
            gp << "\n# order " << m << "\n"
               << "set output '" << stem << "_order" << m << "_loglog.png'\n"
               << "set logscale xy\n"
               << "set xlabel 'N'\nset ylabel 'error'\n"
               << "plot '" << data << "' every ::1 using 1:" << select << " with linespoints title 'order " << m
               << "'\n"
               << "set output '" << stem << "_order" << m << "_stretched.png'\n"
               << "unset logscale x\nset logscale y\n"
               << "set xlabel 'N^" << shortest_repr(gamma) << "'\n"
               << "plot '" << data << "' every ::1 using ($1**" << shortest_repr(gamma) << "):" << select
               << " with linespoints title 'order " << m << "'\n"
               << "unset logscale xy\n";
        }
        write_file(script.string(), gp.str());
        out << script.string() << "\n";
        return kSuccess;
    });
}

} // namespace fapx::cli
