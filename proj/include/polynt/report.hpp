#pragma once

#include "polynt/experiments.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace polynt {

inline constexpr const char* kVersion = "0.1.0";

/// Round-trip decimal form ("%.17g").
std::string format_double(double x);

/// sample_index,coeffs,series,<stat columns>,zero_evals
void write_samples_csv(std::ostream& out, const ExperimentResult& result);
/// experiment,k_or_pattern,estimate,stderr,predicted,verdict
void write_aggregate_csv(std::ostream& out, const ExperimentResult& result);

struct RunManifest {
  std::string subcommand;
  /// Effective key=value settings, keyed by flag name without dashes.
  std::map<std::string, std::string> config;
  std::uint64_t master_seed = 0;
  std::string version = kVersion;
  std::string started;
  std::string finished;
  std::vector<std::string> outputs;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

std::string manifest_to_json(const RunManifest& manifest);
/// Throws ConfigError("manifest", ...) on malformed input.
RunManifest manifest_from_json(const std::string& text);

/// UTC, ISO 8601 to the second.
std::string utc_timestamp();

}  // namespace polynt
