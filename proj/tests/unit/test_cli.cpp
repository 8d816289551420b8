#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

using namespace fapx::cli;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

template <class Cmd>
Result call(Cmd cmd, const Json& config)
{
    std::ostringstream out, err;
    const int code = cmd(config, out, err);
    return {code, out.str(), err.str()};
}

Result run_args(std::vector<std::string> args)
{
    std::vector<char*> argv;
    std::string prog = "frechet-approx";
    argv.push_back(prog.data());
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("fapx_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_SUITE("cli width") {
TEST_CASE("bandlimited and bounded examples")
{
    const Result a = call(cmd_width, Json{{"theorem", "bandlimited"}, {"epsilon", 0.5}, {"norm", 1}, {"omega", 1}});
    REQUIRE(a.code == kSuccess);
    CHECK(Json::parse(a.out)["N_sufficient"] == 64);

    const Result b = call(cmd_width, Json{{"theorem", "bounded"}, {"epsilon", 0.25}, {"cf", 1}, {"m", 1}, {"rate", "power:1:0.5"}});
    REQUIRE(b.code == kSuccess);
    CHECK(Json::parse(b.out)["N_sufficient"] == 64);
}

TEST_CASE("flag parsing reaches the same result")
{
    const Result a = run_args({"width", "--theorem", "bandlimited", "--epsilon", "0.5", "--norm", "1", "--omega", "1"});
    REQUIRE(a.code == kSuccess);
    CHECK(Json::parse(a.out)["N_sufficient"] == 64);
}

TEST_CASE("config errors exit 2")
{
    CHECK(call(cmd_width, Json{{"theorem", "bandlimited"}, {"epsilon", 0}, {"norm", 1}, {"omega", 1}}).code == kConfigError);
    CHECK(call(cmd_width, Json{{"theorem", "nonsense"}, {"epsilon", 0.5}}).code == kConfigError);
    CHECK(call(cmd_width, Json{{"theorem", "bandlimited"}, {"epsilon", "half"}, {"norm", 1}, {"omega", 1}}).code ==
          kConfigError);
    CHECK(call(cmd_width, Json{{"schema_version", 99}, {"theorem", "bandlimited"}}).code == kConfigError);
    CHECK(run_args({"width", "--epsilon", "abc"}).code == kConfigError);
    CHECK(run_args({"no-such-command"}).code == kConfigError);
}

TEST_CASE("help exits 0")
{
    CHECK(run_args({"--help"}).code == kSuccess);
}
}

TEST_SUITE("cli rate-study") {
TEST_CASE("single atom short-circuits at the first width")
{
    const Json atom = Json::parse(R"({"domain":{"lower":[0.0],"upper":[1.0]},"atoms":[{"re":1.0,"im":0.0,"freq":[3.0]}]})");
    const Result r = call(cmd_rate_study, Json{{"target", {{"kind", "atoms"}, {"function", atom}}},
                                               {"widths", {1, 2, 4, 8}},
                                               {"no_timing", true},
                                               {"serial", true}});
    REQUIRE(r.code == kSuccess);
    CHECK(r.out == "N,order,error,seconds\n1,0," + r.out.substr(r.out.find("1,0,") + 4));
    CHECK(count(r.out, "\n") == 2);
}

TEST_CASE("gaussian study has one non-increasing column per order")
{
    const Json target = Json::parse(
        R"({"kind":"cosine","profile":{"name":"gaussian","dim":1,"a":50,"center":[0.5]},"domain":{"lower":[0.0],"upper":[1.0]}})");
    const Json cfg{{"target", target}, {"widths", {2, 4, 8, 16}}, {"orders", {0, 1, 2}}, {"no_timing", true}, {"serial", true}};
    const Result r = call(cmd_rate_study, cfg);
    REQUIRE(r.code == kSuccess);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "N,order,error,seconds");
    std::vector<std::vector<double>> columns(3);
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string n, m, e, s;
        std::getline(fields, n, ',');
        std::getline(fields, m, ',');
        std::getline(fields, e, ',');
        std::getline(fields, s, ',');
        CHECK(s == "0");
        columns.at(std::stoi(m)).push_back(std::stod(e));
    }
    for (const auto& col : columns) {
        CHECK(col.size() == 4);
        for (std::size_t i = 1; i < col.size(); ++i)
            CHECK(col[i] <= col[i - 1]);
    }

    // Deterministic byte-for-byte with timing disabled.
    CHECK(call(cmd_rate_study, cfg).out == r.out);
}

TEST_CASE("bandlimited study writes csv and json files")
{
    const fs::path dir = scratch_dir("study");
    const Json cfg{{"target", {{"kind", "bandlimited"}, {"points", 128}}},
                   {"widths", {4, 8, 16, 32}},
                   {"csv", (dir / "study.csv").string()},
                   {"json", (dir / "study.json").string()},
                   {"no_timing", true},
                   {"serial", true}};
    const Result r = call(cmd_rate_study, cfg);
    REQUIRE(r.code == kSuccess);
    CHECK(slurp(dir / "study.csv").rfind("N,order,error,seconds\n", 0) == 0);
    const Json summary = Json::parse(slurp(dir / "study.json"));
    CHECK(summary["fits"][0]["family"] == "power");
    CHECK(summary["parseval_relative_gap"].get<double>() < 1e-6);
}

TEST_CASE("too few widths")
{
    const Result r = call(cmd_rate_study, Json{{"target", {{"kind", "bandlimited"}}}, {"widths", {1, 2}}});
    CHECK(r.code == kConfigError);
}
}

TEST_SUITE("cli frechet-validate") {
TEST_CASE("loose epsilon passes")
{
    const Result r = call(cmd_frechet_validate, Json{{"epsilon", 1.0}, {"points", 256}, {"serial", true}});
    REQUIRE(r.code == kSuccess);
    const Json rep = Json::parse(r.out);
    CHECK(rep["results"][0]["ell_epsilon"] == 1);
    CHECK(rep["results"][0]["passed"] == true);
    CHECK(rep["results"][0]["margin"].get<double>() > 0.0);
}

TEST_CASE("unreachable epsilon is reported as fitter-limited")
{
    const Result r = call(cmd_frechet_validate,
                          Json{{"epsilon", 1e-9}, {"points", 16}, {"max_atoms", 4}, {"serial", true}});
    CHECK(r.code == kValidationFailure);
    CHECK(r.err.find("fitter-limited") != std::string::npos);
}

TEST_CASE("non-compact profile is a configuration error")
{
    const Result r = call(cmd_frechet_validate, Json{{"profile", {{"name", "gaussian"}, {"dim", 1}, {"a", 1}}}});
    CHECK(r.code == kConfigError);
}
}

TEST_SUITE("cli counterexample") {
TEST_CASE("derivative norms are n^k")
{
    const Result r = call(cmd_counterexample, Json{{"n", {3}}, {"k", {2}}});
    REQUIRE(r.code == kSuccess);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "n,k,l2_norm,derivative_norm,barron_lower_bound");
    std::vector<std::string> fields;
    std::istringstream ss(row);
    for (std::string f; std::getline(ss, f, ',');)
        fields.push_back(f);
    REQUIRE(fields.size() == 5);
    CHECK(fields[0] == "3");
    CHECK(fields[1] == "2");
    CHECK(std::stod(fields[2]) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::stod(fields[3]) == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("defaults cover n up to 32")
{
    const Result r = call(cmd_counterexample, Json::object());
    REQUIRE(r.code == kSuccess);
    CHECK(count(r.out, "\n") == 1 + 32 * 3);
}

TEST_CASE("invalid n")
{
    CHECK(call(cmd_counterexample, Json{{"n", {0}}}).code == kConfigError);
}
}

TEST_SUITE("cli emit-plots") {
TEST_CASE("one block per order with a relative data path")
{
    const fs::path dir = scratch_dir("plots");
    fs::create_directories(dir / "data");
    std::ofstream(dir / "data" / "rates.csv") << "N,order,error,seconds\n2,0,0.5,0\n2,1,0.7,0\n4,0,0.2,0\n4,1,0.4,0\n";
    const Result r = call(cmd_emit_plots, Json{{"csv", (dir / "data" / "rates.csv").string()},
                                               {"script", (dir / "plot.gp").string()}});
    REQUIRE(r.code == kSuccess);
    const std::string gp = slurp(dir / "plot.gp");
    CHECK(count(gp, "# order ") == 2);
    CHECK(gp.find("'data/rates.csv'") != std::string::npos);
    CHECK(gp.find(dir.string()) == std::string::npos);
}

TEST_CASE("default script path sits next to the csv")
{
    const fs::path dir = scratch_dir("plots_default");
    std::ofstream(dir / "r.csv") << "N,order,error,seconds\n2,0,0.5,0\n";
    REQUIRE(call(cmd_emit_plots, Json{{"csv", (dir / "r.csv").string()}}).code == kSuccess);
    CHECK(fs::exists(dir / "r.gp"));
}

TEST_CASE("empty or malformed csv exits 2")
{
    const fs::path dir = scratch_dir("plots_bad");
    std::ofstream(dir / "empty.csv") << "";
    CHECK(call(cmd_emit_plots, Json{{"csv", (dir / "empty.csv").string()}}).code == kConfigError);
    std::ofstream(dir / "header.csv") << "N,order,error,seconds\n";
    CHECK(call(cmd_emit_plots, Json{{"csv", (dir / "header.csv").string()}}).code == kConfigError);
    std::ofstream(dir / "bad.csv") << "N,order,error,seconds\n2,0,abc,0\n";
    CHECK(call(cmd_emit_plots, Json{{"csv", (dir / "bad.csv").string()}}).code == kConfigError);
    CHECK(call(cmd_emit_plots, Json{{"csv", (dir / "missing.csv").string()}}).code == kConfigError);
}
}
