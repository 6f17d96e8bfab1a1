#pragma once

#include "polynt/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polynt {

/// Integer-coefficient polynomial in the Poisson mean lambda; index r holds
/// the coefficient of lambda^r. Trailing zeros are trimmed (zero is {}).
class MomentPolynomial {
 public:
  MomentPolynomial() = default;
  explicit MomentPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of lambda^r (zero past the end).
  BigInt coeff(std::size_t r) const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  double evaluate(double lambda) const;
  std::string to_string() const;

  MomentPolynomial& operator+=(const MomentPolynomial& other);
  MomentPolynomial& operator*=(const BigInt& scalar);
  /// Multiplies by lambda^k.
  MomentPolynomial shifted(unsigned k) const;

  friend bool operator==(const MomentPolynomial&, const MomentPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

BigInt binomial(unsigned n, unsigned k);

/// Stirling number of the second kind S(k, r), with S(0,0) = 1.
BigInt stirling2(unsigned k, unsigned r);

/// k-th moment of the standard Gaussian: (k-1)!! for even k, 0 for odd k.
BigInt gaussian_moment(unsigned k);

/// m_l(lambda) = sum_r S(l, r) lambda^r.
MomentPolynomial poisson_raw_moment(unsigned l);

/// mu_k = sum_l binom(k, l) m_l (-lambda)^(k-l).
MomentPolynomial central_moment_by_definition(unsigned k);
/// mu_k = lambda * sum_{t=0}^{k-2} binom(k-1, t) mu_t, with mu_0 = 1, mu_1 = 0.
MomentPolynomial central_moment_by_recurrence(unsigned k);
/// Both routes; throws ConsistencyError if they differ.
MomentPolynomial poisson_central_moment(unsigned k);

/// m_{l+1} == lambda * sum_s binom(l, s) m_s, exact coefficient comparison.
bool stein_chen_check(unsigned l);

/// X^{-k/2} sum_u sum_{even l_1..l_u >= 2, sum = k} k!/(l_1!...l_u!) binom(X, u).
/// Only meaningful for even k; returns 0 for odd k.
Rational gaussian_coefficient_sum(unsigned k, std::uint64_t X);

/// A sign pattern (eps_1, ..., eps_s), each +1 or -1.
class SignPattern {
 public:
  explicit SignPattern(std::vector<int> entries);
  /// Accepts "+-+" or "1,-1,1" forms.
  static SignPattern parse(const std::string& text);
  /// Pattern with eps_i = +1 iff bit (i-1) of `bits` is set.
  static SignPattern from_bits(unsigned s, unsigned bits);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  /// Bit i set iff entry i is +1.
  unsigned bits() const;
  std::string to_string() const;  // "+-" form
  SignPattern negated() const;

 private:
  std::vector<int> entries_;
};

/// sigma(eps)^2 = 4^{-s} sum over ordered pairs of nonempty translates
/// (T1, T2 = T1 + c) of prod_{T1} eps * prod_{T2} eps.
Rational sigma_squared(const SignPattern& eps);

/// Number of (n_1..n_k) in [X]^k for which the multiset {n_j + i : i in T_j}
/// has every element with even multiplicity. Subsets are bitmasks over [s]
/// (bit i-1 <-> element i). Direct enumeration when X^k <= exhaustive_cap,
/// otherwise counted through clusters of mutually overlapping windows.
BigInt multiset_even_tuple_count(const std::vector<unsigned>& subsets, unsigned s,
                                 std::uint64_t X, std::uint64_t exhaustive_cap = 10'000'000);

/// The two strategies, exposed for cross-validation.
BigInt multiset_even_tuple_count_exhaustive(const std::vector<unsigned>& subsets, unsigned s,
                                            std::uint64_t X);
BigInt multiset_even_tuple_count_clustered(const std::vector<unsigned>& subsets, unsigned s,
                                           std::uint64_t X);

}  // namespace polynt
