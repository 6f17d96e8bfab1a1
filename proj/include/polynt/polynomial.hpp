#pragma once

#include "polynt/bigint.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polynt {

/// Integer polynomial a_0 + a_1 x + ... + a_d x^d of degree at most d.
/// The top coefficient may be zero; the declared bound d is size() - 1.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_(1) {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// Zero polynomial of degree bound d.
  static IntPolynomial zero(unsigned d) { return IntPolynomial(std::vector<BigInt>(d + 1)); }
  /// Parses "a0;a1;...;ad" (low to high, semicolon separated).
  static IntPolynomial parse(std::string_view text);

  unsigned degree_bound() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  /// Same text format as parse().
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

BigInt eval(const IntPolynomial& f, const BigInt& n);
BigInt eval(const IntPolynomial& f, std::int64_t n);

/// Coefficients reduced into [0, p), low to high.
std::vector<std::uint64_t> coeffs_mod(const IntPolynomial& f, std::uint64_t p);
/// Horner evaluation in Z/pZ of a reduced coefficient vector; p < 2^32.
std::uint64_t eval_mod(std::span<const std::uint64_t> reduced, std::uint64_t x, std::uint64_t p);

/// Coefficients reduced to canonical representatives in [0, M).
IntPolynomial reduce_mod(const IntPolynomial& f, const BigInt& M);

/// f(x + c) expanded.
IntPolynomial shift_argument(const IntPolynomial& f, std::int64_t c);

struct PolySampleSpec {
  unsigned d = 1;
  BigInt H = 1;
  std::uint64_t seed = 0;
};

/// Deterministic 64-bit seed for stream `index` under `master`.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

/// Uniform integer in [0, bound] by rejection from the next power of two.
BigInt uniform_below_or_equal(std::mt19937_64& rng, const BigInt& bound);

/// Stream of independent uniform draws from P(d, H), keyed by
/// (spec.seed, stream_index). Successive next() calls continue the stream.
class PolySampler {
 public:
  PolySampler(const PolySampleSpec& spec, std::uint64_t stream_index);

  IntPolynomial next();
  /// Uniform over f in P(d, H) with f == f0 (mod M) coefficientwise.
  /// Throws DomainError if some residue class has no member in [-H, H].
  IntPolynomial next_in_class(const IntPolynomial& f0, const BigInt& M);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  PolySampleSpec spec_;
  std::mt19937_64 rng_;
};

IntPolynomial sample_uniform(const PolySampleSpec& spec, std::uint64_t stream_index);

/// f(x) == 0 for every x in F_p.
bool is_zero_poly_mod_p(const IntPolynomial& f, std::uint64_t p);

/// #{x in F_p : f(x + l) != 0 mod p for every shift l}.
std::uint64_t count_unit_values_mod_p(const IntPolynomial& f, std::uint64_t p,
                                      std::span<const std::int64_t> shifts);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// #{a in F_p^{d+1} : a_0 + a_1 n_i + ... + a_d n_i^d != 0 for all i}.
/// Enumerates directly when p^{d+1} <= cap, otherwise uses inclusion-exclusion
/// over subsets of the forms (requires at most 24 forms).
std::uint64_t count_unit_tuples_linear_system(std::span<const std::int64_t> nodes, unsigned d,
                                              std::uint64_t p,
                                              std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// The two strategies, exposed for cross-validation.
std::uint64_t count_unit_tuples_by_enumeration(std::span<const std::int64_t> nodes, unsigned d,
                                               std::uint64_t p);
std::uint64_t count_unit_tuples_by_inclusion_exclusion(std::span<const std::int64_t> nodes,
                                                       unsigned d, std::uint64_t p);

/// Rank over F_p of the rows (1, n_i, ..., n_i^d) for the selected nodes.
unsigned vandermonde_rank_mod_p(std::span<const std::int64_t> nodes, unsigned d, std::uint64_t p);

}  // namespace polynt
