#pragma once

#include "polynt/arithmetic.hpp"
#include "polynt/bigint.hpp"
#include "polynt/moments.hpp"
#include "polynt/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polynt {

/// Per-call counters surfaced in reports.
struct SampleAudit {
  std::uint64_t zero_evals = 0;
};

// ---- single-polynomial statistics; n runs over 1..X ----

/// (1/X) sum Lambda(f(n)) - S_f(w).
double bh_statistic(const IntPolynomial& f, std::uint64_t X, std::uint64_t w,
                    SampleAudit* audit = nullptr);

/// (1/X) sum prod_i Lambda(f(n + l_i)) - S_{f,l}(w). Shifts must be distinct.
double tuple_statistic(const IntPolynomial& f, std::uint64_t X, std::span<const std::int64_t> shifts,
                       std::uint64_t w, SampleAudit* audit = nullptr);

/// lambda(f(first)), ..., lambda(f(first + count - 1)); zeros give 0.
std::vector<int> liouville_along(const IntPolynomial& f, std::int64_t first, std::uint64_t count,
                                 const FactorOptions& opts = {}, SampleAudit* audit = nullptr);

/// X^{-1/2} sum lambda(f(n)).
double chowla_normalized_sum(const IntPolynomial& f, std::uint64_t X, const FactorOptions& opts = {},
                             SampleAudit* audit = nullptr);

/// Counts of n <= X with (lambda(f(n+1)), ..., lambda(f(n+s))) equal to each
/// pattern, indexed by SignPattern::bits(). Each count is cross-checked per n
/// against 2^{-s} prod (1 + eps_i lambda_i); n whose window meets a zero of f
/// match no pattern and are skipped by the check.
std::vector<std::uint64_t> sign_pattern_counts(const IntPolynomial& f, std::uint64_t X, unsigned s,
                                               const FactorOptions& opts = {},
                                               SampleAudit* audit = nullptr);
/// Same counts from lam[j] = lambda(f(j + 2)), j = 0..X+s-2.
std::vector<std::uint64_t> sign_pattern_counts_from_values(std::span<const int> lam, std::uint64_t X,
                                                           unsigned s);

/// (#{n <= X : pattern matches} - 2^{-s} X) / X^{1/2}.
double sign_pattern_statistic(const IntPolynomial& f, std::uint64_t X, const SignPattern& eps,
                              const FactorOptions& opts = {}, SampleAudit* audit = nullptr);

struct IidSimulation {
  double mean = 0;
  double variance = 0;  // unbiased sample variance
  std::uint64_t trials = 0;
};
/// Normalized pattern count over iid uniform +-1 sequences y(1..X+s).
IidSimulation iid_sign_simulation(std::uint64_t X, const SignPattern& eps, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers = 1);

struct EmpiricalDistribution {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  double probability(std::uint64_t k) const;
  std::uint64_t max_value() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

/// counts[k] = #{1 <= x <= X : f([x, x+L)) contains exactly k primes}.
EmpiricalDistribution interval_count_distribution(const IntPolynomial& f, std::uint64_t X,
                                                  std::uint64_t L, SampleAudit* audit = nullptr);
/// E_{Y ~ rho} Y^k.
double interval_moment(const EmpiricalDistribution& rho, unsigned k);

double poisson_pmf(double mean, std::uint64_t k);
/// (1/2) sum_k |rho(k) - Poisson(mean)(k)|, including the Poisson tail.
double total_variation_to_poisson(const EmpiricalDistribution& rho, double mean);
double standard_normal_cdf(double t);

/// log(H X^d), for H >= 1.
double log_height(const BigInt& H, std::uint64_t X, unsigned d);

/// exp(X^delta) rounded down; throws BudgetError above 2^256.
BigInt height_from_delta(std::uint64_t X, double delta);

// ---- multi-sample experiments ----

struct ExperimentConfig {
  PolySampleSpec spec;  // spec.seed is the master seed
  std::uint64_t X = 0;
  std::uint64_t w = 2;
  std::uint64_t samples = 1;
  std::vector<std::int64_t> shifts;
  unsigned s = 0;  // pattern length
  std::optional<SignPattern> pattern;
  std::uint64_t L = 0;
  double calL = 0;
  unsigned k_max = 4;
  unsigned workers = 1;
  bool deterministic_reduction = true;
  FactorOptions factor;

  /// Throws ConfigError naming the offending key.
  void validate() const;
};

struct SampleRecord {
  std::uint64_t index = 0;
  IntPolynomial f;
  Rational series;
  std::vector<double> stats;
  std::uint64_t zero_evals = 0;
};

struct AggregateRow {
  std::string experiment;
  std::string key;  // k or pattern
  double estimate = 0;
  double stderr_ = 0;
  double predicted = 0;
  std::string verdict;
};

struct ExperimentResult {
  std::vector<std::string> stat_columns;
  std::vector<SampleRecord> samples;
  std::vector<AggregateRow> aggregate;
  std::vector<std::string> warnings;
};

struct MomentEstimate {
  double mean = 0;
  double stderr_ = 0;
};
/// Sample mean and standard error of values^k.
MomentEstimate moment_estimate(std::span<const double> values, unsigned k);
/// Two-sided Kolmogorov-Smirnov statistic against the standard Gaussian.
double ks_statistic_gaussian(std::span<const double> values);

/// One bh_statistic per sample; aggregate moments k = 1..k_max.
ExperimentResult run_bh_moments(const ExperimentConfig& cfg);
/// One tuple_statistic per sample; aggregate moments k = 1..k_max.
ExperimentResult run_tuples(const ExperimentConfig& cfg);
/// One chowla_normalized_sum per sample; moments against C_k plus a KS row.
ExperimentResult run_chowla_clt(const ExperimentConfig& cfg);
/// All 2^s pattern statistics per sample (or just cfg.pattern when set);
/// the aggregate compares their variance with sigma^2.
ExperimentResult run_sign_patterns(const ExperimentConfig& cfg);
/// Rejection-sampled f with S_f(w) != 0, L = round(calL log(H X^d) / S_f(w));
/// TV to Poisson(calL) and the Gaussian CDF at t in {-1, 0, 1}. With cfg.L
/// set, every f uses that L and its own mean S_f(w) L / log(H X^d).
ExperimentResult run_poisson_gaps(const ExperimentConfig& cfg);

enum class LinearFormsTarget { VonMangoldt, Liouville };

struct LinearFormsConfig {
  ExperimentConfig base;
  BigInt M = 1;
  std::vector<std::int64_t> nodes;
  IntPolynomial f0;
  LinearFormsTarget target = LinearFormsTarget::VonMangoldt;
};
/// Mean of prod_i Lambda(f(n_i)) (or lambda) over f = f0 mod M, against the
/// truncated series S_{n, f0 mod M}(w) (or 0).
ExperimentResult run_linear_forms(const LinearFormsConfig& cfg);

}  // namespace polynt
