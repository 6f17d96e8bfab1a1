#pragma once

#include "polynt/bigint.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace polynt {

inline constexpr std::uint64_t kDefaultSpfBound = 100'000'000;
inline constexpr std::uint64_t kDefaultIterationCap = 10'000'000;
inline constexpr std::uint64_t kDefaultSplitSeed = 0x5eed'0f'fac7'0a11ULL;

/// Smallest-prime-factor table for 2 <= n <= bound. Immutable once built and
/// safe to share across threads.
class SpfTable {
 public:
  explicit SpfTable(std::uint64_t bound);

  std::uint64_t bound() const noexcept { return bound_; }
  bool covers(std::uint64_t n) const noexcept { return n >= 2 && n <= bound_; }
  std::uint32_t spf(std::uint64_t n) const noexcept { return spf_[n]; }
  /// Primes up to the bound, ascending.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

 private:
  std::uint64_t bound_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Throws ResourceError when the table cannot be allocated.
SpfTable build_spf_table(std::uint64_t bound);

struct PrimePower {
  BigInt prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = sign * prod p^e, primes strictly increasing. sign == 0 iff n == 0.
struct Factorization {
  int sign = 0;
  std::vector<PrimePower> factors;

  BigInt value() const;
  /// Omega(|n|): prime factors counted with multiplicity.
  unsigned big_omega() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Controls the large-integer factorization path. `table` may be null.
struct FactorOptions {
  const SpfTable* table = nullptr;
  std::uint64_t iteration_cap = kDefaultIterationCap;
  std::uint64_t seed = kDefaultSplitSeed;
};

bool is_prime(std::uint64_t n);
/// True iff |n| is prime.
bool is_prime(const BigInt& n);

/// Throws BudgetError if factor splitting needs more than
/// `opts.iteration_cap` iterations in total.
Factorization factorize(const BigInt& n, const FactorOptions& opts = {});

/// (prime, exponent) pairs of n >= 1, ascending. Fast path for machine words.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n,
                                                           const FactorOptions& opts = {});

// Arithmetic functions, extended to negative n by |n|.

/// (-1)^Omega(|n|); liouville(0) == 0.
int liouville(const BigInt& n, const FactorOptions& opts = {});
int liouville(std::uint64_t n, const FactorOptions& opts = {});

/// Throws DomainError for n == 0.
int mobius(const BigInt& n, const FactorOptions& opts = {});
int mobius(std::uint64_t n, const FactorOptions& opts = {});

/// log p if |n| = p^k, else 0.
double von_mangoldt(const BigInt& n);
double von_mangoldt(std::uint64_t n);

/// If |n| = p^k (k >= 1) returns p, else 0.
BigInt prime_power_base(const BigInt& n);

/// log|n| if |n| is prime, else 0.
double theta(const BigInt& n);

/// Checks liouville(n) == sum_{r^2 | n} mobius(n / r^2) by divisor enumeration.
bool lambda_from_mobius_check(std::uint64_t n, const FactorOptions& opts = {});

}  // namespace polynt
