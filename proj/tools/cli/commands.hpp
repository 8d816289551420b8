#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace fapx::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 2,
    kFitterError = 3,
    kValidationFailure = 4,
};

inline constexpr int kSchemaVersion = 1;

/// Each command reads its settings from a merged JSON config (file values
/// overridden by flags), writes results to `out` (or to files named in the
/// config) and diagnostics to `err`, and returns an ExitCode.
int cmd_width(const nlohmann::ordered_json& config, std::ostream& out, std::ostream& err);
int cmd_rate_study(const nlohmann::ordered_json& config, std::ostream& out, std::ostream& err);
int cmd_frechet_validate(const nlohmann::ordered_json& config, std::ostream& out, std::ostream& err);
int cmd_counterexample(const nlohmann::ordered_json& config, std::ostream& out, std::ostream& err);
int cmd_emit_plots(const nlohmann::ordered_json& config, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand first) and dispatches.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace fapx::cli
