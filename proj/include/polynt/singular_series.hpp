#pragma once

#include "polynt/bigint.hpp"
#include "polynt/polynomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polynt {

/// Primes p <= w, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t w);

/// Product of all primes <= w.
struct Primorial {
  std::uint64_t w;
  BigInt value;
};
Primorial primorial(std::uint64_t w);

struct LocalFactor {
  std::uint64_t prime;
  Rational factor;
};

/// Euler product truncated at w, kept exact.
struct TruncatedSeries {
  std::uint64_t w = 0;
  std::vector<LocalFactor> local_factors;
  Rational value = 1;

  double to_double() const { return value.get_d(); }
};

/// prod_{p<=w} (p^{-1} #{x : f(x) in F_p^x}) / (1 - 1/p).
TruncatedSeries series_f(const IntPolynomial& f, std::uint64_t w);

/// prod_{p<=w} (p^{-1} #{x : f(x + l_i) in F_p^x for all i}) / (1 - 1/p)^k.
TruncatedSeries series_f_tuple(const IntPolynomial& f, std::span<const std::int64_t> shifts,
                               std::uint64_t w);

/// Series for the linear forms a -> a_0 + a_1 n_i + ... + a_d n_i^d restricted
/// to the class f == f0 (mod M); d is f0.degree_bound(). Every prime factor of
/// M must be <= w (throws DomainError otherwise).
TruncatedSeries series_linear_system(std::span<const std::int64_t> nodes, const IntPolynomial& f0,
                                     const BigInt& M, std::uint64_t w);

/// Both sides of sum_{l in F_p^r} #{x : f(x + l_i) != 0 for all i}
///   = p * #{y : f(y) != 0}^r, by brute force.
struct InterchangeSides {
  BigInt lhs;
  BigInt rhs;
};
InterchangeSides interchange_identity_sides(const IntPolynomial& f, std::uint64_t p, unsigned r,
                                            std::uint64_t budget = 100'000'000);
bool interchange_identity_check(const IntPolynomial& f, std::uint64_t p, unsigned r,
                                std::uint64_t budget = 100'000'000);

/// (L * S_f(w))^r - sum over distinct (l_1..l_r) in [1, L]^r of S_{f,l}(w).
Rational tuple_sum_identity_residual(const IntPolynomial& f, std::uint64_t L, unsigned r,
                                     std::uint64_t w, std::uint64_t budget = 10'000'000);

}  // namespace polynt
