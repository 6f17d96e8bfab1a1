#pragma once

#include "polynt/experiments.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace polynt::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kBudgetError = 2, kSelftestFailure = 3, kInternalError = 4 };

using KeyValues = std::map<std::string, std::string>;

/// key=value lines; '#' starts a comment. Throws ConfigError on malformed lines.
KeyValues read_key_value_file(const std::string& path);

/// Validated experiment settings from merged key=value pairs. Missing or bad
/// keys raise ConfigError naming the key.
ExperimentConfig parse_experiment_config(const KeyValues& kv);

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace polynt::cli
