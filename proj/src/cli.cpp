#include "polynt/cli.hpp"

#include "polynt/arithmetic.hpp"
#include "polynt/errors.hpp"
#include "polynt/gowers.hpp"
#include "polynt/moments.hpp"
#include "polynt/report.hpp"
#include "polynt/singular_series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace polynt::cli {

namespace {

struct KeySpec {
  std::string name;
  std::string help;
  bool flag = false;
};

const std::vector<KeySpec> kSamplingKeys = {
    {"d", "degree bound of the sampled polynomials"},
    {"H", "coefficient height; coefficients are uniform in [-H, H] (1e9 style accepted)"},
    {"X", "range n = 1..X (1e4 style accepted)"},
    {"w", "singular series truncation: primes p <= w (default 2)"},
    {"samples", "number of sampled polynomials (default 100)"},
    {"seed", "master seed (default 1)"},
    {"workers", "worker threads (default 1)"},
    {"k-max", "highest moment reported (default 4)"},
    {"spf-bound", "smallest-prime-factor table bound, 0 for none (default 0)"},
    {"deterministic-reduction", "left-to-right summation in reductions", true},
};

const std::map<std::string, std::vector<KeySpec>> kExtraKeys = {
    {"bh-moments", {}},
    {"tuples", {{"shifts", "distinct shifts l_1,...,l_k with |l_i| <= X"}}},
    {"chowla-clt", {}},
    {"sign-patterns",
     {{"pattern", "a pattern such as +- or 1,-1, or a length s for all 2^s patterns"},
      {"iid-trials", "also simulate iid +-1 sequences with this many trials (default 0)"},
      {"iid-X", "sequence length for the iid simulation (default 10000)"}}},
    {"poisson-gaps",
     {{"calL", "target Poisson mean; L = round(calL log(H X^d) / S_f(w))"},
      {"L", "fixed window length instead of calL"}}},
    {"linear-forms",
     {{"M", "residue class modulus (default 1)"},
      {"nodes", "distinct evaluation points n_1,...,n_t"},
      {"f0", "residue class representative a0;a1;... (default zero)"},
      {"target", "von-mangoldt or liouville (default von-mangoldt)"}}},
};

const std::vector<KeySpec> kGowersKeys = {
    {"N", "interval lengths, comma separated"},
    {"M", "cyclic modulus; with N, replaces the least prime >= 5N"},
    {"s", "Gowers norm order (default 2)"},
    {"function", "liouville, mobius, von-mangoldt, one or random-sign (default liouville)"},
    {"seed", "seed for random-sign (default 1)"},
    {"workers", "worker threads (default 1)"},
    {"deterministic-reduction", "left-to-right summation of per-shift terms", true},
};

const std::vector<KeySpec> kSeriesKeys = {
    {"poly", "coefficients a0;a1;...;ad"},
    {"w", "truncation: primes p <= w (default 2)"},
    {"shifts", "optional distinct shifts for the tuple series"},
};

const KeyValues kDefaults = {
    {"w", "2"},         {"samples", "100"}, {"seed", "1"},       {"workers", "1"},
    {"k-max", "4"},     {"spf-bound", "0"}, {"iid-trials", "0"}, {"iid-X", "10000"},
    {"M", "1"},         {"target", "von-mangoldt"},              {"s", "2"},
    {"function", "liouville"},              {"deterministic-reduction", "false"},
};

std::vector<KeySpec> keys_for(const std::string& sub) {
  if (sub == "gowers") return kGowersKeys;
  if (sub == "series") return kSeriesKeys;
  if (sub == "selftest") return {};
  std::vector<KeySpec> keys = kSamplingKeys;
  const auto& extra = kExtraKeys.at(sub);
  keys.insert(keys.end(), extra.begin(), extra.end());
  return keys;
}

const std::string& require(const KeyValues& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end() || it->second.empty()) throw ConfigError(key, "missing required key");
  return it->second;
}

bool has(const KeyValues& kv, const std::string& key) {
  const auto it = kv.find(key);
  return it != kv.end() && !it->second.empty();
}

BigInt get_big(const KeyValues& kv, const std::string& key) {
  const std::string& text = require(kv, key);
  try {
    return parse_big_integer(text);
  } catch (const std::exception& e) {
    throw ConfigError(key, e.what());
  }
}

std::uint64_t get_u64(const KeyValues& kv, const std::string& key) {
  const BigInt v = get_big(kv, key);
  if (sgn(v) < 0 || !fits_u64(v)) throw ConfigError(key, "must be a nonnegative 64-bit integer");
  return to_u64(v);
}

double get_double(const KeyValues& kv, const std::string& key) {
  const std::string& text = require(kv, key);
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key, "not a number: '" + text + "'");
  }
}

bool get_bool(const KeyValues& kv, const std::string& key) {
  const std::string& text = require(kv, key);
  if (text == "true" || text == "1" || text == "on" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "off" || text == "no") return false;
  throw ConfigError(key, "expected true or false, got '" + text + "'");
}

std::vector<std::int64_t> get_i64_list(const KeyValues& kv, const std::string& key) {
  const std::string& text = require(kv, key);
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      const BigInt v = parse_big_integer(piece);
      if (!v.fits_slong_p()) throw std::out_of_range("out of range");
      out.push_back(v.get_si());
    } catch (const std::exception& e) {
      throw ConfigError(key, "bad entry '" + piece + "': " + e.what());
    }
  }
  if (out.empty()) throw ConfigError(key, "empty list");
  return out;
}

IntPolynomial get_poly(const KeyValues& kv, const std::string& key) {
  try {
    return IntPolynomial::parse(require(kv, key));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(key, e.what());
  }
}

unsigned narrow(std::uint64_t v, const std::string& key) {
  if (v > 1'000'000) throw ConfigError(key, "too large");
  return static_cast<unsigned>(v);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("out-dir", "cannot write " + path.string());
  f << content;
}

std::string read_file(const std::string& path, const std::string& key) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError(key, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---- subcommand bodies ----

struct Context {
  std::string subcommand;
  KeyValues kv;
  std::string out_dir;
  bool verbose = false;
  std::ostream& out;
  std::ostream& err;
};

RunManifest make_manifest(const Context& ctx) {
  RunManifest m;
  m.subcommand = ctx.subcommand;
  m.config = ctx.kv;
  if (has(ctx.kv, "seed")) m.master_seed = get_u64(ctx.kv, "seed");
  m.started = utc_timestamp();
  return m;
}

void finish(const Context& ctx, RunManifest& manifest, const std::vector<std::pair<std::string, std::string>>& files) {
  const std::filesystem::path dir(ctx.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("out-dir", "cannot create " + ctx.out_dir + ": " + ec.message());
  for (const auto& [name, content] : files) {
    write_file(dir / name, content);
    manifest.outputs.push_back((dir / name).string());
  }
  manifest.finished = utc_timestamp();
  manifest.outputs.push_back((dir / "manifest.json").string());
  write_file(dir / "manifest.json", manifest_to_json(manifest));
  if (ctx.verbose) ctx.err << "wrote " << join(manifest.outputs, ", ") << "\n";
}

int run_experiment(const Context& ctx) {
  RunManifest manifest = make_manifest(ctx);
  ExperimentConfig cfg = parse_experiment_config(ctx.kv);
  std::unique_ptr<SpfTable> table;
  if (const std::uint64_t bound = get_u64(ctx.kv, "spf-bound"); bound >= 2) {
    table = std::make_unique<SpfTable>(build_spf_table(bound));
    cfg.factor.table = table.get();
  }
  ExperimentResult result;
  const std::string& sub = ctx.subcommand;
  if (sub == "bh-moments") {
    result = run_bh_moments(cfg);
  } else if (sub == "tuples") {
    result = run_tuples(cfg);
  } else if (sub == "chowla-clt") {
    result = run_chowla_clt(cfg);
  } else if (sub == "sign-patterns") {
    if (!cfg.pattern && cfg.s == 0) throw ConfigError("pattern", "missing required key");
    result = run_sign_patterns(cfg);
    const std::uint64_t trials = get_u64(ctx.kv, "iid-trials");
    if (trials > 0) {
      const std::uint64_t iid_X = get_u64(ctx.kv, "iid-X");
      std::vector<SignPattern> patterns;
      if (cfg.pattern) patterns.push_back(*cfg.pattern);
      else
        for (unsigned b = 0; b < (1u << cfg.s); ++b) patterns.push_back(SignPattern::from_bits(cfg.s, b));
      for (std::size_t j = 0; j < patterns.size(); ++j) {
        const IidSimulation sim =
            iid_sign_simulation(iid_X, patterns[j], trials, derive_stream_seed(cfg.spec.seed, 1'000'000 + j),
                                cfg.workers);
        const double target = sigma_squared(patterns[j]).get_d();
        const bool ok = std::abs(sim.variance - target) <= 0.05 * target;
        result.aggregate.push_back({"sign-patterns-iid", patterns[j].to_string(), sim.variance, 0.0, target,
                                    ok ? "pass" : "fail"});
      }
    }
  } else if (sub == "poisson-gaps") {
    if (!has(ctx.kv, "calL") && !has(ctx.kv, "L")) throw ConfigError("calL", "missing required key");
    result = run_poisson_gaps(cfg);
  } else if (sub == "linear-forms") {
    LinearFormsConfig lf;
    lf.base = cfg;
    lf.M = get_big(ctx.kv, "M");
    lf.nodes = get_i64_list(ctx.kv, "nodes");
    lf.f0 = has(ctx.kv, "f0") ? get_poly(ctx.kv, "f0") : IntPolynomial::zero(cfg.spec.d);
    const std::string target = require(ctx.kv, "target");
    if (target == "von-mangoldt") lf.target = LinearFormsTarget::VonMangoldt;
    else if (target == "liouville") lf.target = LinearFormsTarget::Liouville;
    else throw ConfigError("target", "target must be von-mangoldt or liouville");
    result = run_linear_forms(lf);
  }
  for (const auto& w : result.warnings) ctx.err << "warning: " << w << "\n";
  std::ostringstream samples, aggregate;
  write_samples_csv(samples, result);
  write_aggregate_csv(aggregate, result);
  ctx.out << aggregate.str();
  finish(ctx, manifest, {{"samples.csv", samples.str()}, {"aggregate.csv", aggregate.str()}});
  return kOk;
}

std::function<double(std::int64_t)> gowers_function(const std::string& name, std::uint64_t seed) {
  if (name == "liouville") return [](std::int64_t n) { return static_cast<double>(liouville(static_cast<std::uint64_t>(n))); };
  if (name == "mobius") return [](std::int64_t n) { return static_cast<double>(mobius(static_cast<std::uint64_t>(n))); };
  if (name == "von-mangoldt") return [](std::int64_t n) { return von_mangoldt(static_cast<std::uint64_t>(n)); };
  if (name == "one") return [](std::int64_t) { return 1.0; };
  if (name == "random-sign")
    return [seed](std::int64_t n) {
      std::mt19937_64 rng(derive_stream_seed(seed, static_cast<std::uint64_t>(n)));
      return (rng() & 1) ? 1.0 : -1.0;
    };
  throw ConfigError("function", "unknown function '" + name + "'");
}

int run_gowers(const Context& ctx) {
  RunManifest manifest = make_manifest(ctx);
  const unsigned s = narrow(get_u64(ctx.kv, "s"), "s");
  if (s == 0) throw ConfigError("s", "s must be >= 1");
  GowersOptions opts;
  opts.workers = narrow(get_u64(ctx.kv, "workers"), "workers");
  if (opts.workers == 0) throw ConfigError("workers", "workers must be >= 1");
  opts.deterministic_reduction = get_bool(ctx.kv, "deterministic-reduction");
  const auto f = gowers_function(require(ctx.kv, "function"), get_u64(ctx.kv, "seed"));

  std::ostringstream csv;
  csv << "N,M,s,norm\n";
  if (has(ctx.kv, "N")) {
    for (std::int64_t N : get_i64_list(ctx.kv, "N")) {
      if (N <= 0) throw ConfigError("N", "N must be positive");
      const std::uint64_t Nu = static_cast<std::uint64_t>(N);
      const std::uint64_t M = get_u64(ctx.kv, "M") > 1 ? get_u64(ctx.kv, "M") : embedding_modulus(Nu);
      if (M <= Nu) throw ConfigError("M", "M must exceed N");
      csv << Nu << ',' << M << ',' << s << ',' << format_double(gowers_norm_interval(f, Nu, M, s, opts)) << '\n';
    }
  } else {
    const std::uint64_t M = get_u64(ctx.kv, "M");
    if (M < 2) throw ConfigError("N", "missing required key N (or a cyclic modulus M >= 2)");
    // residue n mod M carries f(n) for n = 1..M
    std::vector<double> values(M);
    for (std::uint64_t n = 1; n <= M; ++n) values[n % M] = f(static_cast<std::int64_t>(n));
    csv << ',' << M << ',' << s << ',' << format_double(gowers_norm_cyclic(values, s, opts)) << '\n';
  }
  ctx.out << csv.str();
  finish(ctx, manifest, {{"gowers.csv", csv.str()}});
  return kOk;
}

int run_series(const Context& ctx) {
  const IntPolynomial f = get_poly(ctx.kv, "poly");
  const std::uint64_t w = get_u64(ctx.kv, "w");
  TruncatedSeries series;
  if (has(ctx.kv, "shifts")) {
    const auto shifts = get_i64_list(ctx.kv, "shifts");
    if (std::set<std::int64_t>(shifts.begin(), shifts.end()).size() != shifts.size())
      throw ConfigError("shifts", "shifts must be distinct");
    series = series_f_tuple(f, shifts, w);
  } else {
    series = series_f(f, w);
  }
  ctx.out << to_string(series.value) << "\n";
  if (ctx.verbose) {
    for (const auto& lf : series.local_factors) ctx.out << "p=" << lf.prime << " " << to_string(lf.factor) << "\n";
    ctx.out << "approx " << format_double(series.to_double()) << "\n";
  }
  return kOk;
}

int run_selftest(const Context& ctx) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    ctx.out << (ok ? "PASS " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
  };
  auto guarded = [&](const std::string& name, const std::function<bool()>& body) {
    try {
      report(name, body());
    } catch (const std::exception& e) {
      ctx.err << name << ": " << e.what() << "\n";
      report(name, false);
    }
  };

  guarded("stein-chen l<=12", [] {
    for (unsigned l = 0; l <= 12; ++l)
      if (!stein_chen_check(l)) return false;
    return true;
  });
  guarded("central moment recurrence k<=12", [] {
    for (unsigned k = 0; k <= 12; ++k) poisson_central_moment(k);
    return poisson_central_moment(2) == MomentPolynomial({0, 1}) &&
           poisson_central_moment(4) == MomentPolynomial({0, 1, 3});
  });
  guarded("lambda-mu identity n<=100000", [] {
    const SpfTable table = build_spf_table(100'000);
    FactorOptions opts;
    opts.table = &table;
    for (std::uint64_t n = 1; n <= 100'000; ++n)
      if (!lambda_from_mobius_check(n, opts)) return false;
    return true;
  });
  guarded("interchange identity p<=13 r<=3", [] {
    const PolySampleSpec spec{3, 1000, 20240601};
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
      for (unsigned r = 1; r <= 3; ++r)
        for (std::uint64_t i = 0; i < 5; ++i)
          if (!interchange_identity_check(sample_uniform(spec, p * 100 + r * 10 + i), p, r)) return false;
    return true;
  });
  guarded("x^2+x+2 series vanishes at w=2", [] {
    return sgn(series_f(IntPolynomial::parse("2;1;1"), 2).value) == 0;
  });
  return all_ok ? kOk : kSelftestFailure;
}

}  // namespace

KeyValues read_key_value_file(const std::string& path) {
  std::istringstream in(read_file(path, "config"));
  KeyValues kv;
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config", path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r\"");
      const auto e = s.find_last_not_of(" \t\r\"");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

ExperimentConfig parse_experiment_config(const KeyValues& kv) {
  ExperimentConfig cfg;
  cfg.spec.d = narrow(get_u64(kv, "d"), "d");
  cfg.spec.H = get_big(kv, "H");
  cfg.X = get_u64(kv, "X");
  cfg.spec.seed = get_u64(kv, "seed");
  cfg.w = get_u64(kv, "w");
  cfg.samples = get_u64(kv, "samples");
  cfg.workers = narrow(get_u64(kv, "workers"), "workers");
  cfg.k_max = narrow(get_u64(kv, "k-max"), "k-max");
  cfg.deterministic_reduction = get_bool(kv, "deterministic-reduction");
  if (has(kv, "shifts")) cfg.shifts = get_i64_list(kv, "shifts");
  if (has(kv, "pattern")) {
    const std::string& text = kv.at("pattern");
    if (std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      cfg.s = narrow(get_u64(kv, "pattern"), "pattern");
      if (cfg.s == 0) throw ConfigError("pattern", "pattern length must be >= 1");
    } else {
      try {
        cfg.pattern = SignPattern::parse(text);
      } catch (const std::exception& e) {
        throw ConfigError("pattern", e.what());
      }
      cfg.s = static_cast<unsigned>(cfg.pattern->size());
    }
  }
  if (has(kv, "L")) {
    cfg.L = get_u64(kv, "L");
    if (cfg.L == 0) throw ConfigError("L", "L must be >= 1");
  }
  if (has(kv, "calL")) cfg.calL = get_double(kv, "calL");
  cfg.validate();
  return cfg;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  std::optional<RunManifest> manifest;
  try {
    // A leading --manifest supplies the subcommand.
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--manifest" && i + 1 < args.size()) path = args[i + 1];
      else if (args[i].rfind("--manifest=", 0) == 0) path = args[i].substr(11);
      if (path.empty()) continue;
      manifest = manifest_from_json(read_file(path, "manifest"));
      if (i == 0) args.insert(args.begin(), manifest->subcommand);
      break;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  CLI::App app{"Experiments and exact checks for random polynomial prime statistics", "polynt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"bh-moments", "moments of the averaged Bateman-Horn statistic"},
      {"tuples", "moments of the shifted-tuple statistic"},
      {"chowla-clt", "moments and Gaussian fit of X^{-1/2} sum lambda(f(n))"},
      {"sign-patterns", "variance of Liouville sign-pattern counts along f"},
      {"poisson-gaps", "prime counts of f over windows against Poisson and Gaussian laws"},
      {"gowers", "Gowers U^s norms of arithmetic functions"},
      {"series", "exact truncated singular series of a polynomial"},
      {"linear-forms", "products over points of f in a residue class against the singular series"},
      {"selftest", "exact identity suites"},
  };
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, CLI::Option*>> options;
  std::map<std::string, bool> flags;
  std::string config_path, manifest_path, out_dir = "out";
  bool verbose = false;
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (const auto& key : keys_for(name)) {
      if (key.flag) options[name][key.name] = sub->add_flag("--" + key.name, flags[name + "/" + key.name], key.help);
      else options[name][key.name] = sub->add_option("--" + key.name, values[name][key.name], key.help);
    }
    sub->add_option("--config", config_path, "key=value file; flags override it");
    sub->add_option("--manifest", manifest_path, "replay the settings recorded in a manifest");
    sub->add_option("--out-dir", out_dir, "output directory (default out)");
    sub->add_flag("--verbose", verbose, "extra diagnostics on stderr");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    const auto keys = keys_for(sub);
    std::set<std::string> allowed;
    for (const auto& k : keys) allowed.insert(k.name);
    KeyValues kv;
    for (const auto& k : keys)
      if (kDefaults.count(k.name)) kv[k.name] = kDefaults.at(k.name);
    auto merge = [&](const KeyValues& extra, const std::string& source) {
      for (const auto& [k, v] : extra) {
        if (k == "out-dir") {
          out_dir = v;
          continue;
        }
        if (!allowed.count(k)) throw ConfigError(k, "unknown key '" + k + "' in " + source + " for " + sub);
        kv[k] = v;
      }
    };
    if (!manifest_path.empty() && !manifest) manifest = manifest_from_json(read_file(manifest_path, "manifest"));
    if (manifest) {
      if (manifest->subcommand != sub)
        throw ConfigError("manifest", "manifest is for " + manifest->subcommand + ", not " + sub);
      merge(manifest->config, "manifest");
    }
    const bool out_dir_flag = app.get_subcommands().front()->get_option("--out-dir")->count() > 0;
    const std::string out_dir_cli = out_dir;
    if (!config_path.empty()) merge(read_key_value_file(config_path), config_path);
    if (out_dir_flag) out_dir = out_dir_cli;
    for (const auto& k : keys) {
      if (options[sub][k.name]->count() == 0) continue;
      kv[k.name] = k.flag ? (flags[sub + "/" + k.name] ? "true" : "false") : values[sub][k.name];
    }

    Context ctx{sub, kv, out_dir, verbose, out, err};
    if (sub == "gowers") return run_gowers(ctx);
    if (sub == "series") return run_series(ctx);
    if (sub == "selftest") return run_selftest(ctx);
    return run_experiment(ctx);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace polynt::cli
