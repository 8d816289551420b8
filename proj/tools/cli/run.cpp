#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "frechet_approx/core/errors.hpp"

namespace fapx::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class FlagType { Number, Integer, Text, NumberList, IntegerList, JsonText, Switch };

struct Flag {
    std::string name;   // e.g. "--epsilon"
    std::string key;    // config path, dots for nesting
    FlagType type;
    std::string help;
};

struct Subcommand {
    std::string name;
    std::string description;
    std::vector<Flag> flags;
    std::function<int(const Json&, std::ostream&, std::ostream&)> body;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, sep))
        if (!part.empty())
            parts.push_back(part);
    return parts;
}

double to_number(const std::string& s)
{
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size())
        throw std::invalid_argument(s);
    return v;
}

long long to_integer(const std::string& s)
{
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size())
        throw std::invalid_argument(s);
    return v;
}

Json convert(const Flag& flag, const std::string& raw)
{
    try {
        switch (flag.type) {
        case FlagType::Number: return to_number(raw);
        case FlagType::Integer: return to_integer(raw);
        case FlagType::Text: return raw;
        case FlagType::Switch: return true;
        case FlagType::JsonText: return Json::parse(raw);
        case FlagType::NumberList: {
            Json list = Json::array();
            for (const auto& p : split(raw, ','))
                list.push_back(to_number(p));
            return list;
        }
        case FlagType::IntegerList: {
            Json list = Json::array();
            for (const auto& p : split(raw, ','))
                list.push_back(to_integer(p));
            return list;
        }
        }
    } catch (const std::exception&) {
        throw InputError("invalid value '" + raw + "' for " + flag.name);
    }
    return nullptr;
}

void assign(Json& config, const std::string& path, Json value)
{
    Json* node = &config;
    const auto parts = split(path, '.');
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (!node->contains(parts[i]) || !(*node)[parts[i]].is_object())
            (*node)[parts[i]] = Json::object();
        node = &(*node)[parts[i]];
    }
    (*node)[parts.back()] = std::move(value);
}

std::vector<Subcommand> subcommands()
{
    using T = FlagType;
    const Flag serial{"--serial", "serial", T::Switch, "single worker thread (bit-reproducible)"};
    return {
        {"width",
         "Sufficient width N for a target Frechet error",
         {{"--theorem", "theorem", T::Text, "monotonic | bounded | exp-barron | bandlimited"},
          {"--epsilon", "epsilon", T::Number, "target error in (0, 1]"},
          {"--cf", "cf", T::Number, "rate constant C_f"},
          {"--m", "m", T::Number, "constant growth M"},
          {"--growth", "growth", T::Text, "growth sequence: const:M | bracket:OMEGA | list:M0,M1,..."},
          {"--rate", "rate", T::Text, "rate function: power:C:r | sexp:C:c:gamma"},
          {"--norm", "norm", T::Number, "Barron norm of the target"},
          {"--omega", "omega", T::Number, "bandlimit"},
          {"--c-ell", "c_ell", T::Number, "exponential-rate constant c"},
          {"--C-ell", "C_ell", T::Number, "exponential-rate prefactor C"},
          {"--beta", "beta", T::Number, "Barron exponent in (0, 1)"},
          {"--d", "d", T::Integer, "dimension"},
          {"--output", "output", T::Text, "also write the JSON result here"}},
         cmd_width},
        {"rate-study",
         "Fit ladders over widths and report errors with a fitted rate",
         {{"--target", "target", T::JsonText, "target description as JSON"},
          {"--widths", "widths", T::IntegerList, "comma-separated widths"},
          {"--orders", "orders", T::IntegerList, "comma-separated Sobolev orders"},
          {"--family", "family", T::Text, "power | sexp"},
          {"--gamma", "gamma", T::Number, "stretched-exponential exponent"},
          {"--fitter", "fitter", T::JsonText, "fitter settings as JSON"},
          {"--csv", "csv", T::Text, "CSV output path (default stdout)"},
          {"--json", "json", T::Text, "fitted-rate JSON output path"},
          {"--no-timing", "no_timing", T::Switch, "write 0 in the seconds column"},
          serial},
         cmd_rate_study},
        {"frechet-validate",
         "Check the bandlimited width guarantee end to end",
         {{"--epsilon", "epsilon", T::NumberList, "comma-separated target errors"},
          {"--profile", "profile", T::JsonText, "compact catalog profile as JSON"},
          {"--omega", "omega", T::Number, "bandlimit (default: profile support)"},
          {"--points", "points", T::Integer, "frequency samples per axis"},
          {"--max-atoms", "max_atoms", T::Integer, "cap on fitted atoms"},
          {"--fitter", "fitter", T::JsonText, "fitter settings as JSON"},
          {"--output", "output", T::Text, "also write the JSON report here"},
          serial},
         cmd_frechet_validate},
        {"counterexample",
         "Derivative growth and Barron lower bounds for cos(n x)/sqrt(pi)",
         {{"--n", "n", T::IntegerList, "comma-separated frequencies"},
          {"--k", "k", T::IntegerList, "comma-separated derivative orders"},
          {"--beta", "beta", T::Number, "weight exponent"},
          {"--c", "c", T::Number, "weight constant"},
          {"--csv", "csv", T::Text, "CSV output path (default stdout)"}},
         cmd_counterexample},
        {"emit-plots",
         "Write a gnuplot script for a rate-study CSV",
         {{"--csv", "csv", T::Text, "rate-study CSV"},
          {"--script", "script", T::Text, "script path (default: CSV path with .gp)"},
          {"--gamma", "gamma", T::Number, "exponent for the stretched axis"}},
         cmd_emit_plots},
    };
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Frechet-metric approximation experiments"};
    app.require_subcommand(1);
    const auto commands = subcommands();
    std::vector<std::map<std::string, std::string>> values(commands.size());
    std::vector<std::string> config_paths(commands.size());
    std::vector<CLI::App*> apps;
    std::vector<std::vector<CLI::Option*>> options(commands.size());
    for (std::size_t i = 0; i < commands.size(); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].description);
        sub->add_option("--config", config_paths[i], "JSON config file; flags override its values");
        for (const Flag& f : commands[i].flags) {
            if (f.type == FlagType::Switch)
                options[i].push_back(sub->add_flag(f.name, f.help));
            else
                options[i].push_back(sub->add_option(f.name, values[i][f.name], f.help));
        }
        apps.push_back(sub);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? kSuccess : kConfigError;
    }

    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (!apps[i]->parsed())
            continue;
        Json config = Json::object();
        try {
            if (!config_paths[i].empty()) {
                std::ifstream in(config_paths[i]);
                if (!in)
                    throw InputError("cannot read config '" + config_paths[i] + "'");
                config = Json::parse(in);
                if (!config.is_object())
                    throw InputError("config must be a JSON object");
            }
            for (std::size_t k = 0; k < commands[i].flags.size(); ++k) {
                const Flag& f = commands[i].flags[k];
                if (options[i][k]->count() == 0)
                    continue;
                assign(config, f.key, convert(f, values[i][f.name]));
            }
        } catch (const InputError& e) {
            err << commands[i].name << ": " << e.what() << "\n";
            return kConfigError;
        } catch (const Json::exception& e) {
            err << commands[i].name << ": malformed JSON: " << e.what() << "\n";
            return kConfigError;
        }
        return commands[i].body(config, out, err);
    }
    return kConfigError;
}

} // namespace fapx::cli
