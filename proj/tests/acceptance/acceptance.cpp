// One PASS/FAIL line per acceptance criterion. argv[1] is the polynt CLI.

#include "polynt/arithmetic.hpp"
#include "polynt/errors.hpp"
#include "polynt/experiments.hpp"
#include "polynt/gowers.hpp"
#include "polynt/moments.hpp"
#include "polynt/singular_series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace polynt;
namespace fs = std::filesystem;

namespace {

// Tolerances and budgets.
constexpr double kIdentitySeconds = 10;
constexpr double kCoefficientSumSeconds = 10;
constexpr double kInterchangeSeconds = 30;
constexpr double kLambdaMuSeconds = 60;
constexpr double kGowersSeconds = 300;
constexpr double kCoefficientSumDrift = 0.05;
constexpr double kChowlaLow = 0.85;
constexpr double kChowlaHigh = 1.15;
constexpr double kKsMax = 0.05;
constexpr double kStderrMultiple = 3;
constexpr double kIidRelative = 0.05;
constexpr double kLambdaRelative = 0.15;
constexpr double kTvMax = 0.1;
constexpr double kCdfMax = 0.05;
constexpr double kDeltaTolerance = 1e-10;
constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool pass = false;
  std::string detail;
};

unsigned hardware_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt(double v, int precision = 4) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

const AggregateRow& row(const ExperimentResult& r, const std::string& key) {
  for (const auto& a : r.aggregate)
    if (a.key == key) return a;
  throw std::runtime_error("missing aggregate row " + key);
}

Outcome exact_identities() {
  for (unsigned l = 0; l <= 12; ++l)
    if (!stein_chen_check(l)) return {false, "Stein-Chen fails at l=" + std::to_string(l)};
  for (unsigned k = 0; k <= 12; ++k)
    if (central_moment_by_definition(k) != central_moment_by_recurrence(k))
      return {false, "recurrence fails at k=" + std::to_string(k)};
  if (!poisson_central_moment(1).is_zero()) return {false, "mu_1 != 0"};
  if (poisson_central_moment(2) != MomentPolynomial({0, 1})) return {false, "mu_2 != l"};
  if (poisson_central_moment(4) != MomentPolynomial({0, 1, 3})) return {false, "mu_4 != l + 3l^2"};
  for (unsigned k = 2; k <= 12; k += 2)
    if (poisson_central_moment(k).coeff(k / 2) != gaussian_moment(k))
      return {false, "C_k coefficient fails at k=" + std::to_string(k)};
  return {true, "k, l <= 12"};
}

Outcome coefficient_sums() {
  for (std::uint64_t X = 1; X <= (1u << 14); X = X < 64 ? X + 1 : 2 * X)
    if (gaussian_coefficient_sum(2, X) != 1) return {false, "k=2 differs from 1 at X=" + std::to_string(X)};
  bool ok = true;
  std::string detail;
  for (unsigned k : {4u, 6u, 8u}) {
    const Rational Ck = gaussian_moment(k);
    std::vector<double> q;
    for (std::uint64_t X = 16; X <= (1u << 14); X *= 2) {
      Rational diff = gaussian_coefficient_sum(k, X) - Ck;
      q.push_back(std::abs(diff.get_d()) * static_cast<double>(X));
    }
    double worst_step = 0;
    for (std::size_t i = 1; i < q.size(); ++i) worst_step = std::max(worst_step, std::abs(q[i] / q[i - 1] - 1));
    const double spread = *std::max_element(q.begin(), q.end()) / *std::min_element(q.begin(), q.end()) - 1;
    ok = ok && worst_step < kCoefficientSumDrift;
    detail += " k=" + std::to_string(k) + ": step " + fmt(worst_step, 3) + ", range spread " + fmt(spread, 3) + ";";
  }
  return {ok, "per-doubling drift < 5%:" + detail};
}

Outcome interchange() {
  std::uint64_t checks = 0;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
    for (unsigned r = 1; r <= 3; ++r)
      for (std::uint64_t i = 0; i < 100; ++i) {
        const PolySampleSpec spec{1 + static_cast<unsigned>(i % 3), 1000, kSeed};
        const IntPolynomial f = sample_uniform(spec, p * 10000 + r * 1000 + i);
        const auto sides = interchange_identity_sides(f, p, r);
        if (sides.lhs != sides.rhs) return {false, "f=" + f.to_string() + " p=" + std::to_string(p)};
        ++checks;
      }
  return {true, std::to_string(checks) + " exact checks"};
}

Outcome series_bounds() {
  std::mt19937_64 rng(kSeed);
  const auto primes = primes_up_to(50);
  std::uint64_t checks = 0, zeros = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const unsigned d = 1 + static_cast<unsigned>(rng() % 3);
    const BigInt H = std::vector<BigInt>{1, 3, 100, 1000000}[rng() % 4];
    const IntPolynomial f = sample_uniform(PolySampleSpec{d, H, kSeed + 1}, i);
    Rational upper = 1, lower = 1;
    bool vanishes = false;
    for (std::uint64_t p : primes) {
      const Rational inv(1, p);
      upper /= Rational(1) - inv;
      lower *= (Rational(1) - Rational(std::min<std::uint64_t>(d, p - 1), p)) / (Rational(1) - inv);
      vanishes = vanishes || is_zero_poly_mod_p(f, p);
      const Rational S = series_f(f, p).value;
      ++checks;
      if (S > upper) return {false, "upper bound fails for " + f.to_string()};
      if (S != 0 && S < lower) return {false, "lower bound fails for " + f.to_string()};
      if ((S == 0) != vanishes) return {false, "zero dichotomy fails for " + f.to_string()};
      zeros += S == 0;
    }
  }
  return {true, std::to_string(checks) + " (f, w) pairs, " + std::to_string(zeros) + " zero series"};
}

Outcome lambda_mu() {
  const SpfTable table = build_spf_table(1'000'000);
  FactorOptions opts;
  opts.table = &table;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n)
    if (!lambda_from_mobius_check(n, opts)) return {false, "fails at n=" + std::to_string(n)};
  return {true, "n <= 10^6"};
}

ExperimentConfig config(unsigned d, const BigInt& H, std::uint64_t X, std::uint64_t samples) {
  ExperimentConfig cfg;
  cfg.spec = PolySampleSpec{d, H, kSeed};
  cfg.X = X;
  cfg.samples = samples;
  cfg.workers = hardware_workers();
  return cfg;
}

Outcome chowla_clt() {
  auto cfg = config(2, BigInt("1000000000"), 400, 2000);
  cfg.k_max = 3;
  const auto r = run_chowla_clt(cfg);
  const auto &m1 = row(r, "1"), &m2 = row(r, "2"), &m3 = row(r, "3"), &ks = row(r, "ks");
  const bool ok = m2.estimate >= kChowlaLow && m2.estimate <= kChowlaHigh &&
                  std::abs(m1.estimate) <= kStderrMultiple * m1.stderr_ &&
                  std::abs(m3.estimate) <= kStderrMultiple * m3.stderr_ && ks.estimate <= kKsMax;
  return {ok, "m1 " + fmt(m1.estimate) + " +- " + fmt(m1.stderr_) + ", m2 " + fmt(m2.estimate) + ", m3 " +
                  fmt(m3.estimate) + " +- " + fmt(m3.stderr_) + ", KS " + fmt(ks.estimate)};
}

Outcome sign_patterns() {
  bool ok = true;
  std::string detail = "iid:";
  for (unsigned s = 1; s <= 2; ++s)
    for (unsigned b = 0; b < (1u << s); ++b) {
      const auto eps = SignPattern::from_bits(s, b);
      const double target = sigma_squared(eps).get_d();
      const auto sim = iid_sign_simulation(10'000, eps, 10'000, kSeed, hardware_workers());
      ok = ok && std::abs(sim.variance - target) <= kIidRelative * target;
      detail += " " + eps.to_string() + " " + fmt(sim.variance);
    }
  detail += "; lambda:";
  for (unsigned s = 1; s <= 2; ++s) {
    auto cfg = config(2, BigInt("1000000000"), 400, 1000);
    cfg.s = s;
    const auto r = run_sign_patterns(cfg);
    for (const auto& a : r.aggregate) {
      ok = ok && std::abs(a.estimate - a.predicted) <= kLambdaRelative * a.predicted;
      detail += " " + a.key + " " + fmt(a.estimate);
    }
  }
  return {ok, detail};
}

Outcome averaged_bh() {
  auto cfg = config(1, BigInt(10'000'000), 300, 500);
  cfg.w = 11;
  cfg.k_max = 2;
  const auto small = run_bh_moments(cfg);
  cfg.X = 600;
  const auto large = run_bh_moments(cfg);
  const auto& m1 = row(small, "1");
  const double m2_small = row(small, "2").estimate, m2_large = row(large, "2").estimate;
  const bool ok = std::abs(m1.estimate) <= kStderrMultiple * m1.stderr_ && m2_large < m2_small;
  return {ok, "m1 " + fmt(m1.estimate) + " +- " + fmt(m1.stderr_) + ", m2 " + fmt(m2_small) + " (X=300) -> " +
                  fmt(m2_large) + " (X=600)"};
}

Outcome poisson_gaps() {
  auto cfg = config(1, BigInt(1'000'000), 2000, 200);
  cfg.w = 5;
  cfg.calL = 1;
  const auto poisson = run_poisson_gaps(cfg);
  cfg.calL = 25;
  const auto gaussian = run_poisson_gaps(cfg);
  const double tv = row(poisson, "tv").estimate;
  bool ok = tv <= kTvMax;
  std::string detail = "TV " + fmt(tv) + " (calL=1); CDF errors (calL=25):";
  for (const char* key : {"cdf_t-1", "cdf_t0", "cdf_t1"}) {
    const auto& a = row(gaussian, key);
    const double err = std::abs(a.estimate - a.predicted);
    ok = ok && err <= kCdfMax;
    detail += std::string(" ") + key + " " + fmt(err);
  }
  detail += "; acceptance rate " + fmt(row(poisson, "acceptance_rate").estimate);
  return {ok, detail};
}

Outcome gowers_kernel() {
  for (unsigned s = 1; s <= 4; ++s)
    if (gowers_norm_cyclic(std::vector<double>(31, 1.0), s) != 1.0) return {false, "||1|| != 1"};
  double worst = 0;
  for (std::size_t M = 2; M <= 101; ++M)
    for (unsigned s : {2u, 3u}) {
      std::vector<double> delta(M, 0.0);
      delta[0] = 1;
      const double expected = std::pow(static_cast<double>(M), -(s + 1.0) / (1u << s));
      worst = std::max(worst, std::abs(gowers_norm_cyclic(delta, s) - expected));
    }
  if (worst > kDeltaTolerance) return {false, "delta error " + fmt(worst)};
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> f(1 + rng() % 64);
    for (auto& v : f) v = (rng() & 1) ? 1.0 : -1.0;
    if (gowers_norm_cyclic(f, 2) > gowers_norm_cyclic(f, 3) + 1e-12) return {false, "U2 > U3"};
  }
  const auto lam = [](std::int64_t n) { return static_cast<double>(liouville(static_cast<std::uint64_t>(n))); };
  GowersOptions opts;
  opts.workers = hardware_workers();
  std::string detail = "delta error " + fmt(worst, 2) + "; lambda U2:";
  double prev = INFINITY;
  bool ok = true;
  for (std::uint64_t N : {100, 300, 1000, 3000}) {
    const double v = gowers_norm_interval(lam, N, 2, opts);
    ok = ok && v <= prev;
    prev = v;
    detail += " " + fmt(v);
  }
  return {ok, detail};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome reproducibility(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const fs::path root = fs::temp_directory_path() / "polynt_acceptance";
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"bh-moments", "--d 2 --H 1e6 --X 200 --w 7 --samples 64"},
      {"tuples", "--d 1 --H 1e6 --X 200 --shifts 0,2 --samples 64"},
      {"chowla-clt", "--d 2 --H 1e9 --X 200 --samples 64"},
      {"sign-patterns", "--d 2 --H 1e9 --X 200 --pattern 3 --samples 64"},
      {"poisson-gaps", "--d 1 --H 1e6 --X 500 --w 5 --calL 1 --samples 32"},
      {"linear-forms", "--d 1 --H 1e6 --X 1 --w 5 --M 6 --nodes 1,2 --f0 '1;0' --samples 64"},
  };
  auto sh = [&](const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  for (const auto& [sub, args] : runs) {
    const fs::path base = root / sub;
    if (sh(sub + " " + args + " --seed 5 --workers 1 --out-dir " + (base / "first").string()) != 0)
      return {false, sub + " first run failed"};
    const std::string manifest = (base / "first" / "manifest.json").string();
    for (const char* workers : {"1", "8"}) {
      const fs::path out = base / (std::string("replay") + workers);
      if (sh("--manifest " + manifest + " --workers " + workers + " --out-dir " + out.string()) != 0)
        return {false, sub + " replay failed"};
      if (slurp(out / "samples.csv") != slurp(base / "first" / "samples.csv") ||
          slurp(out / "samples.csv").empty())
        return {false, sub + " samples.csv differs with " + workers + " workers"};
    }
  }
  fs::remove_all(root);
  return {true, std::to_string(runs.size()) + " subcommands, 1 vs 8 workers"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double seconds_limit;  // 0 for none
  };
  const std::vector<Criterion> criteria = {
      {"1 exact identity suite", exact_identities, kIdentitySeconds},
      {"2 Gaussian coefficient sums", coefficient_sums, kCoefficientSumSeconds},
      {"3 interchange identity", interchange, kInterchangeSeconds},
      {"4 singular series bounds", series_bounds, 0},
      {"5 lambda-mu identity", lambda_mu, kLambdaMuSeconds},
      {"6 Chowla CLT", chowla_clt, 0},
      {"7 sign-pattern variance", sign_patterns, 0},
      {"8 averaged Bateman-Horn", averaged_bh, 0},
      {"9 Poisson gaps", poisson_gaps, 0},
      {"10 Gowers kernel", gowers_kernel, kGowersSeconds},
      {"11 reproducibility", [&] { return reproducibility(cli); }, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds_limit > 0 && secs > c.seconds_limit) {
      o.pass = false;
      o.detail += "; over time limit " + fmt(c.seconds_limit);
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << fmt(secs, 3) << " s): " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
