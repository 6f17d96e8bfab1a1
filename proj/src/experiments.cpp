#include "polynt/experiments.hpp"

#include "polynt/errors.hpp"
#include "polynt/parallel.hpp"
#include "polynt/singular_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace polynt {

namespace {

std::vector<double> lambda_values(const IntPolynomial& f, std::int64_t first, std::uint64_t count,
                                  SampleAudit* audit) {
  std::vector<double> out(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const BigInt v = eval(f, first + static_cast<std::int64_t>(i));
    if (sgn(v) == 0 && audit) ++audit->zero_evals;
    out[i] = von_mangoldt(v);
  }
  return out;
}

void require_distinct(std::span<const std::int64_t> shifts, const char* what) {
  std::set<std::int64_t> seen(shifts.begin(), shifts.end());
  if (seen.size() != shifts.size()) throw DomainError(std::string(what) + ": shifts must be distinct");
}

bool is_constant(const IntPolynomial& f) {
  for (std::size_t j = 1; j < f.coeffs().size(); ++j)
    if (sgn(f[j]) != 0) return false;
  return true;
}

std::string fmt_key(unsigned k) { return std::to_string(k); }

std::string within_stderr(double estimate, double target, double stderr_) {
  return std::abs(estimate - target) <= 3 * stderr_ ? "pass" : "fail";
}

template <class Fn>
std::vector<SampleRecord> collect_samples(const ExperimentConfig& cfg, Fn&& fn) {
  std::vector<SampleRecord> out(cfg.samples);
  parallel_for(cfg.samples, cfg.workers, [&](std::size_t i) {
    PolySampler sampler(cfg.spec, i);
    SampleRecord rec = fn(sampler);
    rec.index = i;
    out[i] = std::move(rec);
  });
  return out;
}

std::vector<double> column(const std::vector<SampleRecord>& samples, std::size_t j) {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& r : samples) out.push_back(r.stats[j]);
  return out;
}

void add_moment_rows(ExperimentResult& result, const std::string& name, std::span<const double> values,
                     unsigned k_max) {
  for (unsigned k = 1; k <= k_max; ++k) {
    const MomentEstimate est = moment_estimate(values, k);
    result.aggregate.push_back({name, fmt_key(k), est.mean, est.stderr_, 0.0,
                                k == 1 ? within_stderr(est.mean, 0.0, est.stderr_) : "recorded"});
  }
}

}  // namespace

double bh_statistic(const IntPolynomial& f, std::uint64_t X, std::uint64_t w, SampleAudit* audit) {
  const std::int64_t zero = 0;
  return tuple_statistic(f, X, std::span(&zero, 1), w, audit);
}

double tuple_statistic(const IntPolynomial& f, std::uint64_t X, std::span<const std::int64_t> shifts,
                       std::uint64_t w, SampleAudit* audit) {
  if (X == 0) throw DomainError("tuple_statistic: X must be positive");
  if (shifts.empty()) throw DomainError("tuple_statistic: need at least one shift");
  require_distinct(shifts, "tuple_statistic");
  const auto [lo, hi] = std::minmax_element(shifts.begin(), shifts.end());
  const std::int64_t first = 1 + *lo;
  const std::uint64_t count = X + static_cast<std::uint64_t>(*hi - *lo);
  const std::vector<double> lam = lambda_values(f, first, count, audit);
  double sum = 0;
  for (std::uint64_t n = 1; n <= X; ++n) {
    double prod = 1;
    for (std::int64_t l : shifts) prod *= lam[static_cast<std::uint64_t>(static_cast<std::int64_t>(n) + l - first)];
    sum += prod;
  }
  return sum / static_cast<double>(X) - series_f_tuple(f, shifts, w).to_double();
}

std::vector<int> liouville_along(const IntPolynomial& f, std::int64_t first, std::uint64_t count,
                                 const FactorOptions& opts, SampleAudit* audit) {
  std::vector<int> out(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const BigInt v = eval(f, first + static_cast<std::int64_t>(i));
    if (sgn(v) == 0) {
      if (audit) ++audit->zero_evals;
      out[i] = 0;
    } else {
      out[i] = liouville(v, opts);
    }
  }
  return out;
}

double chowla_normalized_sum(const IntPolynomial& f, std::uint64_t X, const FactorOptions& opts,
                             SampleAudit* audit) {
  if (X == 0) throw DomainError("chowla_normalized_sum: X must be positive");
  const std::vector<int> lam = liouville_along(f, 1, X, opts, audit);
  const long long total = std::accumulate(lam.begin(), lam.end(), 0LL);
  return static_cast<double>(total) / std::sqrt(static_cast<double>(X));
}

std::vector<std::uint64_t> sign_pattern_counts_from_values(std::span<const int> lam, std::uint64_t X,
                                                           unsigned s) {
  if (s == 0 || s > 20) throw DomainError("sign patterns need 1 <= s <= 20");
  if (lam.size() + 1 < X + s) throw DomainError("sign_pattern_counts: too few lambda values");
  const unsigned n_patterns = 1u << s;
  std::vector<std::uint64_t> counts(n_patterns, 0);
  for (std::uint64_t n = 1; n <= X; ++n) {
    // window lambda(f(n+1..n+s)) = lam[n-1 .. n+s-2]
    const int* window = lam.data() + (n - 1);
    bool has_zero = false;
    unsigned bits = 0;
    for (unsigned i = 0; i < s; ++i) {
      if (window[i] == 0) has_zero = true;
      if (window[i] == 1) bits |= 1u << i;
    }
    if (has_zero) continue;
    ++counts[bits];
    // 2^{-s} prod (1 + eps_i lambda_i) must be the match indicator
    for (unsigned pattern = 0; pattern < n_patterns; ++pattern) {
      long long prod = 1;
      for (unsigned i = 0; i < s; ++i) prod *= 1 + ((pattern >> i & 1) ? 1 : -1) * window[i];
      const long long expected = pattern == bits ? (1LL << s) : 0;
      if (prod != expected)
        throw ConsistencyError("sign pattern indicator identity failed at n = " + std::to_string(n));
    }
  }
  return counts;
}

std::vector<std::uint64_t> sign_pattern_counts(const IntPolynomial& f, std::uint64_t X, unsigned s,
                                               const FactorOptions& opts, SampleAudit* audit) {
  const std::vector<int> lam = liouville_along(f, 2, X + s - 1, opts, audit);
  return sign_pattern_counts_from_values(lam, X, s);
}

double sign_pattern_statistic(const IntPolynomial& f, std::uint64_t X, const SignPattern& eps,
                              const FactorOptions& opts, SampleAudit* audit) {
  const unsigned s = static_cast<unsigned>(eps.size());
  const auto counts = sign_pattern_counts(f, X, s, opts, audit);
  const double Xd = static_cast<double>(X);
  return (static_cast<double>(counts[eps.bits()]) - Xd / static_cast<double>(1u << s)) / std::sqrt(Xd);
}

IidSimulation iid_sign_simulation(std::uint64_t X, const SignPattern& eps, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers) {
  if (trials < 2) throw DomainError("iid_sign_simulation: need at least 2 trials");
  if (X == 0) throw DomainError("iid_sign_simulation: X must be positive");
  const unsigned s = static_cast<unsigned>(eps.size());
  const unsigned target = eps.bits();
  const unsigned mask = s >= 32 ? ~0u : (1u << s) - 1;
  const double Xd = static_cast<double>(X);
  const double expected = Xd / std::ldexp(1.0, static_cast<int>(s));
  std::vector<double> values(trials);
  parallel_for(trials, workers, [&](std::size_t t) {
    std::mt19937_64 rng(derive_stream_seed(seed, t));
    // y(1..X+s); bit i of `window` is y(n+1+i) == +1
    std::uint64_t word = 0;
    unsigned left = 0;
    auto next_bit = [&] {
      if (left == 0) {
        word = rng();
        left = 64;
      }
      const unsigned b = word & 1;
      word >>= 1;
      --left;
      return b;
    };
    next_bit();  // y(1) never enters a window
    unsigned window = 0;
    for (unsigned i = 0; i < s; ++i) window |= next_bit() << i;
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= X; ++n) {
      if ((window & mask) == target) ++count;
      window = (window >> 1) | (next_bit() << (s - 1));
    }
    values[t] = (static_cast<double>(count) - expected) / std::sqrt(Xd);
  });
  IidSimulation out;
  out.trials = trials;
  for (double v : values) out.mean += v;
  out.mean /= static_cast<double>(trials);
  for (double v : values) out.variance += (v - out.mean) * (v - out.mean);
  out.variance /= static_cast<double>(trials - 1);
  return out;
}

double EmpiricalDistribution::probability(std::uint64_t k) const {
  if (total == 0) return 0;
  const auto it = counts.find(k);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
}

EmpiricalDistribution interval_count_distribution(const IntPolynomial& f, std::uint64_t X,
                                                  std::uint64_t L, SampleAudit* audit) {
  if (L == 0) throw DomainError("interval_count_distribution: L must be >= 1");
  if (X == 0) throw DomainError("interval_count_distribution: X must be positive");
  // prime[y - 1] for y = 1..X+L-1
  const std::uint64_t span = X + L - 1;
  std::vector<unsigned char> prime(span);
  for (std::uint64_t y = 1; y <= span; ++y) {
    const BigInt v = eval(f, static_cast<std::int64_t>(y));
    if (sgn(v) == 0 && audit) ++audit->zero_evals;
    prime[y - 1] = is_prime(v);
  }
  EmpiricalDistribution rho;
  rho.total = X;
  std::uint64_t in_window = 0;
  for (std::uint64_t j = 0; j < L; ++j) in_window += prime[j];
  std::uint64_t weighted = 0;
  for (std::uint64_t x = 1; x <= X; ++x) {
    ++rho.counts[in_window];
    weighted += in_window;
    if (x < X) in_window = in_window + prime[x - 1 + L] - prime[x - 1];
  }
  // y lies in the windows starting at x in [max(1, y-L+1), min(X, y)]
  std::uint64_t by_position = 0;
  for (std::uint64_t y = 1; y <= span; ++y)
    if (prime[y - 1]) by_position += std::min(X, y) + 1 - (y >= L ? y - L + 1 : 1);
  if (weighted != by_position)
    throw ConsistencyError("interval double-counting identity failed");
  return rho;
}

double interval_moment(const EmpiricalDistribution& rho, unsigned k) {
  if (rho.total == 0) throw DomainError("interval_moment: empty distribution");
  double acc = 0;
  for (const auto& [value, count] : rho.counts) {
    double term = 1;
    for (unsigned i = 0; i < k; ++i) term *= static_cast<double>(value);
    acc += term * static_cast<double>(count);
  }
  return acc / static_cast<double>(rho.total);
}

double poisson_pmf(double mean, std::uint64_t k) {
  if (mean < 0) throw DomainError("poisson_pmf: negative mean");
  if (mean == 0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1));
}

double total_variation_to_poisson(const EmpiricalDistribution& rho, double mean) {
  const double reach = mean + 12 * std::sqrt(mean) + 20;
  const std::uint64_t K = std::max(rho.max_value(), static_cast<std::uint64_t>(std::ceil(reach)));
  double diff = 0;
  double covered = 0;
  for (std::uint64_t k = 0; k <= K; ++k) {
    const double p = poisson_pmf(mean, k);
    covered += p;
    diff += std::abs(rho.probability(k) - p);
  }
  diff += std::max(0.0, 1.0 - covered);
  return diff / 2;
}

double standard_normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

double log_height(const BigInt& H, std::uint64_t X, unsigned d) {
  if (H < 1) throw DomainError("log_height: H must be >= 1");
  if (X == 0) throw DomainError("log_height: X must be positive");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, H.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0) +
         static_cast<double>(d) * std::log(static_cast<double>(X));
}

BigInt height_from_delta(std::uint64_t X, double delta) {
  if (X == 0) throw DomainError("height_from_delta: X must be positive");
  const double power = std::pow(static_cast<double>(X), delta);
  if (!(power <= 256 * std::log(2.0))) throw BudgetError("exp(X^delta) exceeds 2^256");
  BigInt out;
  mpz_set_d(out.get_mpz_t(), std::floor(std::exp(power)));
  return out;
}

// ---- config ----

void ExperimentConfig::validate() const {
  if (X == 0) throw ConfigError("X", "X must be a positive integer");
  if (samples == 0) throw ConfigError("samples", "samples must be positive");
  if (spec.d == 0) throw ConfigError("d", "d must be >= 1");
  if (sgn(spec.H) < 0) throw ConfigError("H", "H must be nonnegative");
  if (workers == 0) throw ConfigError("workers", "workers must be >= 1");
  if (k_max == 0) throw ConfigError("k-max", "k-max must be >= 1");
  {
    std::set<std::int64_t> seen(shifts.begin(), shifts.end());
    if (seen.size() != shifts.size()) throw ConfigError("shifts", "shifts must be distinct");
  }
  for (std::int64_t l : shifts)
    if (static_cast<std::uint64_t>(l < 0 ? -l : l) > X)
      throw ConfigError("shifts", "shifts must satisfy |l| <= X");
  if (pattern && s != 0 && pattern->size() != s)
    throw ConfigError("pattern", "pattern length disagrees with s");
  if (calL < 0) throw ConfigError("calL", "calL must be nonnegative");
}

MomentEstimate moment_estimate(std::span<const double> values, unsigned k) {
  if (values.empty()) throw DomainError("moment_estimate: no values");
  std::vector<double> powered(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    double p = 1;
    for (unsigned j = 0; j < k; ++j) p *= values[i];
    powered[i] = p;
  }
  const double n = static_cast<double>(values.size());
  double mean = 0;
  for (double p : powered) mean += p;
  mean /= n;
  MomentEstimate out{mean, 0};
  if (values.size() > 1) {
    double var = 0;
    for (double p : powered) var += (p - mean) * (p - mean);
    var /= n - 1;
    out.stderr_ = std::sqrt(var / n);
  }
  return out;
}

double ks_statistic_gaussian(std::span<const double> values) {
  if (values.empty()) throw DomainError("ks_statistic_gaussian: no values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double F = standard_normal_cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - F, F - static_cast<double>(i) / n});
  }
  return d;
}

// ---- runners ----

ExperimentResult run_bh_moments(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.stat_columns = {"bh_statistic"};
  result.samples = collect_samples(cfg, [&](PolySampler& sampler) {
    SampleRecord rec;
    rec.f = sampler.next();
    SampleAudit audit;
    rec.stats = {bh_statistic(rec.f, cfg.X, cfg.w, &audit)};
    rec.series = series_f(rec.f, cfg.w).value;
    rec.zero_evals = audit.zero_evals;
    return rec;
  });
  add_moment_rows(result, "bh-moments", column(result.samples, 0), cfg.k_max);
  return result;
}

ExperimentResult run_tuples(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.shifts.empty()) throw ConfigError("shifts", "tuples needs at least one shift");
  ExperimentResult result;
  result.stat_columns = {"tuple_statistic"};
  result.samples = collect_samples(cfg, [&](PolySampler& sampler) {
    SampleRecord rec;
    rec.f = sampler.next();
    SampleAudit audit;
    rec.stats = {tuple_statistic(rec.f, cfg.X, cfg.shifts, cfg.w, &audit)};
    rec.series = series_f_tuple(rec.f, cfg.shifts, cfg.w).value;
    rec.zero_evals = audit.zero_evals;
    return rec;
  });
  add_moment_rows(result, "tuples", column(result.samples, 0), cfg.k_max);
  return result;
}

ExperimentResult run_chowla_clt(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.stat_columns = {"chowla_sum"};
  result.samples = collect_samples(cfg, [&](PolySampler& sampler) {
    SampleRecord rec;
    rec.f = sampler.next();
    SampleAudit audit;
    rec.stats = {chowla_normalized_sum(rec.f, cfg.X, cfg.factor, &audit)};
    rec.series = series_f(rec.f, cfg.w).value;
    rec.zero_evals = audit.zero_evals;
    return rec;
  });
  std::uint64_t constant = 0;
  for (const auto& rec : result.samples) constant += is_constant(rec.f);
  if (constant)
    result.warnings.push_back(std::to_string(constant) +
                              " constant polynomial(s) sampled; their sums have zero variance");
  const std::vector<double> values = column(result.samples, 0);
  for (unsigned k = 1; k <= cfg.k_max; ++k) {
    const MomentEstimate est = moment_estimate(values, k);
    const double target = gaussian_moment(k).get_d();
    std::string verdict;
    if (k == 2) verdict = est.mean >= 0.85 && est.mean <= 1.15 ? "pass" : "fail";
    else verdict = within_stderr(est.mean, target, est.stderr_);
    result.aggregate.push_back({"chowla-clt", fmt_key(k), est.mean, est.stderr_, target, verdict});
  }
  const double ks = ks_statistic_gaussian(values);
  result.aggregate.push_back({"chowla-clt", "ks", ks, 0.0, 0.0, ks <= 0.05 ? "pass" : "fail"});
  return result;
}

ExperimentResult run_sign_patterns(const ExperimentConfig& cfg) {
  cfg.validate();
  const unsigned s = cfg.pattern ? static_cast<unsigned>(cfg.pattern->size()) : cfg.s;
  if (s == 0) throw ConfigError("pattern", "sign-patterns needs a pattern or a pattern length");
  if (s > 12) throw ConfigError("pattern", "pattern length must be <= 12");
  std::vector<SignPattern> patterns;
  if (cfg.pattern) patterns.push_back(*cfg.pattern);
  else
    for (unsigned b = 0; b < (1u << s); ++b) patterns.push_back(SignPattern::from_bits(s, b));

  ExperimentResult result;
  for (const auto& p : patterns) result.stat_columns.push_back("pattern" + p.to_string());
  const double Xd = static_cast<double>(cfg.X);
  result.samples = collect_samples(cfg, [&](PolySampler& sampler) {
    SampleRecord rec;
    rec.f = sampler.next();
    SampleAudit audit;
    const auto counts = sign_pattern_counts(rec.f, cfg.X, s, cfg.factor, &audit);
    for (const auto& p : patterns)
      rec.stats.push_back((static_cast<double>(counts[p.bits()]) - Xd / static_cast<double>(1u << s)) /
                          std::sqrt(Xd));
    rec.series = series_f(rec.f, cfg.w).value;
    rec.zero_evals = audit.zero_evals;
    return rec;
  });
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    const std::vector<double> values = column(result.samples, j);
    const double n = static_cast<double>(values.size());
    double mean = 0;
    for (double v : values) mean += v;
    mean /= n;
    std::vector<double> sq;
    for (double v : values) sq.push_back((v - mean) * (v - mean));
    const MomentEstimate est = moment_estimate(sq, 1);
    const double variance = values.size() > 1 ? est.mean * n / (n - 1) : 0.0;
    const double target = sigma_squared(patterns[j]).get_d();
    const bool ok = target > 0 ? std::abs(variance - target) <= 0.15 * target : variance == 0;
    result.aggregate.push_back(
        {"sign-patterns", patterns[j].to_string(), variance, est.stderr_, target, ok ? "pass" : "fail"});
  }
  return result;
}

ExperimentResult run_poisson_gaps(const ExperimentConfig& cfg) {
  cfg.validate();
  const bool fixed_L = cfg.L > 0;
  if (!fixed_L && !(cfg.calL > 0)) throw ConfigError("calL", "poisson-gaps needs calL > 0 or a fixed L");
  if (sgn(cfg.spec.H) <= 0) throw ConfigError("H", "poisson-gaps needs H >= 1");
  constexpr std::uint64_t kMaxAttempts = 100'000;
  const double log_hx = log_height(cfg.spec.H, cfg.X, cfg.spec.d);
  const double ts[3] = {-1.0, 0.0, 1.0};

  ExperimentResult result;
  result.stat_columns = {"attempts", "L_real", "L", "tv", "cdf_t-1", "cdf_t0", "cdf_t1", "mean_count"};
  result.samples = collect_samples(cfg, [&](PolySampler& sampler) {
    SampleRecord rec;
    std::uint64_t attempts = 0;
    TruncatedSeries series;
    do {
      if (++attempts > kMaxAttempts)
        throw BudgetError("poisson-gaps: no polynomial with nonzero series after " +
                          std::to_string(kMaxAttempts) + " draws");
      rec.f = sampler.next();
      series = series_f(rec.f, cfg.w);
    } while (sgn(series.value) == 0);
    rec.series = series.value;
    const double S = series.to_double();
    // fixed L: the Poisson mean becomes S L / log(H X^d) per polynomial
    const double L_real = fixed_L ? static_cast<double>(cfg.L) : cfg.calL * log_hx / S;
    const double mean = fixed_L ? S * L_real / log_hx : cfg.calL;
    const std::uint64_t L = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(L_real)));
    SampleAudit audit;
    const EmpiricalDistribution rho = interval_count_distribution(rec.f, cfg.X, L, &audit);
    rec.zero_evals = audit.zero_evals;
    rec.stats = {static_cast<double>(attempts), L_real, static_cast<double>(L),
                 total_variation_to_poisson(rho, mean)};
    const double p = S / log_hx;
    const double Ld = static_cast<double>(L);
    for (double t : ts) {
      const double threshold = p * Ld + t * std::sqrt(std::max(0.0, (p - p * p) * Ld));
      double cdf = 0;
      for (const auto& [k, count] : rho.counts)
        if (static_cast<double>(k) <= threshold) cdf += static_cast<double>(count);
      rec.stats.push_back(cdf / static_cast<double>(rho.total));
    }
    rec.stats.push_back(interval_moment(rho, 1));
    return rec;
  });

  std::uint64_t attempts = 0;
  std::uint64_t small_L = 0;
  for (const auto& rec : result.samples) {
    attempts += static_cast<std::uint64_t>(rec.stats[0]);
    if (rec.stats[1] < 1) ++small_L;
  }
  if (small_L)
    result.warnings.push_back(std::to_string(small_L) + " sample(s) had L < 1 before rounding up");
  const double rate = static_cast<double>(cfg.samples) / static_cast<double>(attempts);
  result.aggregate.push_back({"poisson-gaps", "acceptance_rate", rate, 0.0, 0.0, "recorded"});

  const MomentEstimate tv = moment_estimate(column(result.samples, 3), 1);
  result.aggregate.push_back({"poisson-gaps", "tv", tv.mean, tv.stderr_, 0.0, tv.mean <= 0.1 ? "pass" : "fail"});
  for (int i = 0; i < 3; ++i) {
    const MomentEstimate cdf = moment_estimate(column(result.samples, 4 + i), 1);
    const double target = standard_normal_cdf(ts[i]);
    result.aggregate.push_back({"poisson-gaps", "cdf_t" + std::to_string(static_cast<int>(ts[i])), cdf.mean,
                                cdf.stderr_, target, std::abs(cdf.mean - target) <= 0.05 ? "pass" : "fail"});
  }
  const MomentEstimate m1 = moment_estimate(column(result.samples, 7), 1);
  result.aggregate.push_back({"poisson-gaps", "mean_count", m1.mean, m1.stderr_, fixed_L ? 0.0 : cfg.calL,
                              "recorded"});
  return result;
}

ExperimentResult run_linear_forms(const LinearFormsConfig& cfg) {
  const ExperimentConfig& base = cfg.base;
  base.validate();
  if (cfg.nodes.empty()) throw ConfigError("nodes", "linear-forms needs at least one node");
  {
    std::set<std::int64_t> seen(cfg.nodes.begin(), cfg.nodes.end());
    if (seen.size() != cfg.nodes.size()) throw ConfigError("nodes", "nodes must be distinct");
  }
  if (cfg.M < 1) throw ConfigError("M", "M must be >= 1");
  if (cfg.f0.degree_bound() != base.spec.d) throw ConfigError("f0", "f0 must have degree bound d");

  Rational predicted = 0;
  if (cfg.target == LinearFormsTarget::VonMangoldt) {
    try {
      predicted = series_linear_system(cfg.nodes, cfg.f0, cfg.M, base.w).value;
    } catch (const DomainError& e) {
      throw ConfigError("M", e.what());
    }
  }
  const bool liouville_target = cfg.target == LinearFormsTarget::Liouville;

  ExperimentResult result;
  result.stat_columns = {"product"};
  result.samples = collect_samples(base, [&](PolySampler& sampler) {
    SampleRecord rec;
    rec.f = sampler.next_in_class(cfg.f0, cfg.M);
    SampleAudit audit;
    double prod = 1;
    for (std::int64_t n : cfg.nodes) {
      const BigInt v = eval(rec.f, n);
      if (sgn(v) == 0) ++audit.zero_evals;
      prod *= liouville_target ? (sgn(v) == 0 ? 0.0 : liouville(v, base.factor)) : von_mangoldt(v);
    }
    rec.stats = {prod};
    rec.series = predicted;
    rec.zero_evals = audit.zero_evals;
    return rec;
  });
  const MomentEstimate est = moment_estimate(column(result.samples, 0), 1);
  const double target = predicted.get_d();
  result.aggregate.push_back({"linear-forms", liouville_target ? "liouville" : "von_mangoldt", est.mean,
                              est.stderr_, target, within_stderr(est.mean, target, est.stderr_)});
  return result;
}

}  // namespace polynt
