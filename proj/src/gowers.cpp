#include "polynt/gowers.hpp"

#include "polynt/arithmetic.hpp"
#include "polynt/errors.hpp"
#include "polynt/parallel.hpp"

#include <cmath>
#include <string>

namespace polynt {

namespace {

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double acc = 0;
    for (std::size_t i = lo; i < hi; ++i) acc += v[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Sum over h_2..h_{depth} of (sum_n g)^2, with g already differenced by h_1.
double nested_square_sum(const std::vector<double>& g, unsigned remaining,
                         std::vector<std::vector<double>>& scratch) {
  const std::size_t M = g.size();
  if (remaining == 0) {
    double acc = 0;
    for (double x : g) acc += x;
    return acc * acc;
  }
  auto& next = scratch[remaining - 1];
  next.resize(M);
  double total = 0;
  for (std::size_t h = 0; h < M; ++h) {
    for (std::size_t n = 0, m = h; n < M; ++n) {
      next[n] = g[n] * g[m];
      if (++m == M) m = 0;
    }
    total += nested_square_sum(next, remaining - 1, scratch);
  }
  return total;
}

}  // namespace

double gowers_norm_cyclic(std::span<const double> f, unsigned s, const GowersOptions& opts) {
  if (s == 0) throw DomainError("gowers_norm_cyclic: s must be >= 1");
  const std::size_t M = f.size();
  if (M == 0) throw DomainError("gowers_norm_cyclic: empty sequence");
  const double work = std::pow(static_cast<double>(M), static_cast<double>(s));
  if (work > opts.budget)
    throw BudgetError("gowers_norm_cyclic: M^s = " + std::to_string(work) + " exceeds budget " +
                      std::to_string(opts.budget));

  const double Md = static_cast<double>(M);
  double sup = 0;
  for (double x : f) sup = std::max(sup, std::abs(x));
  if (sup == 0) return 0;

  double raw;
  if (s == 1) {
    double acc = 0;
    for (double x : f) acc += x;
    raw = (acc / Md) * (acc / Md);
  } else {
    std::vector<double> per_h1(M);
    parallel_for(M, opts.workers, [&](std::size_t h1) {
      std::vector<double> g(M);
      for (std::size_t n = 0, m = h1; n < M; ++n) {
        g[n] = f[n] * f[m];
        if (++m == M) m = 0;
      }
      std::vector<std::vector<double>> scratch(s);
      per_h1[h1] = nested_square_sum(g, s - 2, scratch);
    });
    double total;
    if (opts.deterministic_reduction) {
      total = 0;
      for (double x : per_h1) total += x;
    } else {
      total = pairwise_sum(per_h1, 0, M);
    }
    // M^{-(s-1)} sum_h (sum_n g / M)^2
    raw = total / std::pow(Md, static_cast<double>(s + 1));
  }

  const double scale = std::pow(sup, static_cast<double>(1u << s));
  if (raw < 0) {
    if (raw < -1e-12 * scale)
      throw ConsistencyError("gowers_norm_cyclic: negative average " + std::to_string(raw));
    raw = 0;
  }
  return std::pow(raw, 1.0 / static_cast<double>(1u << s));
}

std::uint64_t embedding_modulus(std::uint64_t N) {
  std::uint64_t M = 5 * N;
  if (M < 2) M = 2;
  while (!is_prime(M)) ++M;
  return M;
}

std::vector<double> embed_interval(const std::function<double(std::int64_t)>& f, std::uint64_t N,
                                   std::uint64_t M) {
  if (N == 0) throw DomainError("embed_interval: N must be positive");
  if (M <= N) throw DomainError("embed_interval: modulus must exceed N");
  std::vector<double> out(M, 0.0);
  for (std::uint64_t n = 1; n <= N; ++n) out[n] = f(static_cast<std::int64_t>(n));
  return out;
}

double gowers_norm_interval(const std::function<double(std::int64_t)>& f, std::uint64_t N,
                            unsigned s, const GowersOptions& opts) {
  return gowers_norm_interval(f, N, embedding_modulus(N), s, opts);
}

double gowers_norm_interval(const std::function<double(std::int64_t)>& f, std::uint64_t N,
                            std::uint64_t M, unsigned s, const GowersOptions& opts) {
  const std::vector<double> values = embed_interval(f, N, M);
  return gowers_norm_cyclic(values, s, opts);
}

}  // namespace polynt
