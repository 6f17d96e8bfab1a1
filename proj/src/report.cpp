#include "polynt/report.hpp"

#include "polynt/errors.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <ostream>

#include <json.hpp>

namespace polynt {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_samples_csv(std::ostream& out, const ExperimentResult& result) {
  out << "sample_index,coeffs,series";
  for (const auto& c : result.stat_columns) out << ',' << c;
  out << ",zero_evals\n";
  for (const auto& rec : result.samples) {
    out << rec.index << ',' << rec.f.to_string() << ',' << to_string(rec.series);
    for (double v : rec.stats) out << ',' << format_double(v);
    out << ',' << rec.zero_evals << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const ExperimentResult& result) {
  out << "experiment,k_or_pattern,estimate,stderr,predicted,verdict\n";
  for (const auto& row : result.aggregate)
    out << row.experiment << ',' << row.key << ',' << format_double(row.estimate) << ','
        << format_double(row.stderr_) << ',' << format_double(row.predicted) << ',' << row.verdict << '\n';
}

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["subcommand"] = m.subcommand;
  j["config"] = m.config;
  j["master_seed"] = m.master_seed;
  j["version"] = m.version;
  j["started"] = m.started;
  j["finished"] = m.finished;
  j["outputs"] = m.outputs;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RunManifest m;
    m.subcommand = j.at("subcommand").get<std::string>();
    m.config = j.at("config").get<std::map<std::string, std::string>>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    m.started = j.value("started", "");
    m.finished = j.value("finished", "");
    m.outputs = j.value("outputs", std::vector<std::string>{});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("manifest", std::string("malformed manifest: ") + e.what());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace polynt
