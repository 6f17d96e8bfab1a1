#include <doctest.h>

#include "polynt/errors.hpp"
#include "polynt/moments.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>

using namespace polynt;

namespace {

// partitions of [k] into r blocks via restricted growth strings
long count_partitions(unsigned k, unsigned r) {
  if (k == 0) return r == 0;
  long count = 0;
  std::vector<unsigned> a(k, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
    if (i == k) {
      count += blocks == r;
      return;
    }
    for (unsigned b = 0; b <= blocks && b < k; ++b) rec(i + 1, std::max(blocks, b + 1));
  };
  rec(1, 1);
  return count;
}

double poisson_sum(double lambda, const std::function<double(double)>& g) {
  double total = 0, term = std::exp(-lambda);
  for (int k = 0; k < 200; ++k) {
    total += g(k) * term;
    term *= lambda / (k + 1);
  }
  return total;
}

// #{(n_1..n_k) in [X]^k : every value used an even number of times}
long even_tuples(unsigned k, unsigned X) {
  long count = 0;
  std::vector<unsigned> n(k, 0);
  for (;;) {
    std::map<unsigned, unsigned> mult;
    for (unsigned v : n) ++mult[v];
    bool even = true;
    for (const auto& [v, m] : mult) even = even && m % 2 == 0;
    count += even;
    unsigned j = 0;
    while (j < k && ++n[j] == X) n[j++] = 0;
    if (j == k) break;
  }
  return count;
}

// sum_c Cov(I_0, I_c) for I_n = prod_i 1[y(n+i) = eps_i], iid uniform signs
Rational iid_covariance_sum(const SignPattern& eps) {
  const int s = static_cast<int>(eps.size());
  Rational total = 0;
  for (int c = -(s - 1); c <= s - 1; ++c) {
    const int len = s + std::abs(c);
    const int off0 = c < 0 ? -c : 0;
    const int offc = c < 0 ? 0 : c;
    long hits = 0;
    for (long bits = 0; bits < (1L << len); ++bits) {
      auto y = [&](int i) { return (bits >> i & 1) ? 1 : -1; };
      bool a = true, b = true;
      for (int i = 0; i < s; ++i) {
        a = a && y(off0 + i) == eps[static_cast<std::size_t>(i)];
        b = b && y(offc + i) == eps[static_cast<std::size_t>(i)];
      }
      hits += a && b;
    }
    total += Rational(hits, 1L << len) - Rational(1, 1L << (2 * s));
  }
  total.canonicalize();
  return total;
}

}  // namespace

TEST_CASE("Stirling numbers") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(0, 2) == 0);
  for (unsigned k = 1; k <= 12; ++k) CHECK(stirling2(k, 1) == 1);
  CHECK(stirling2(4, 2) == 7);
  for (unsigned k = 0; k <= 8; ++k)
    for (unsigned r = 0; r <= k; ++r) REQUIRE(stirling2(k, r) == count_partitions(k, r));
  CHECK(stirling2(20, 10) == BigInt("5917584964655"));
}

TEST_CASE("Gaussian moments") {
  CHECK(gaussian_moment(0) == 1);
  CHECK(gaussian_moment(1) == 0);
  CHECK(gaussian_moment(2) == 1);
  CHECK(gaussian_moment(4) == 3);
  CHECK(gaussian_moment(12) == 10395);
  for (unsigned k = 4; k <= 20; k += 2) CHECK(gaussian_moment(k) == BigInt(BigInt(k - 1) * gaussian_moment(k - 2)));
}

TEST_CASE("Poisson raw moments") {
  CHECK(poisson_raw_moment(0) == MomentPolynomial({1}));
  CHECK(poisson_raw_moment(2) == MomentPolynomial({0, 1, 1}));
  CHECK(poisson_raw_moment(3) == MomentPolynomial({0, 1, 3, 1}));
  for (unsigned l = 0; l <= 8; ++l)
    for (double lambda : {0.5, 2.5}) {
      const double direct = poisson_sum(lambda, [l](double k) { return std::pow(k, l); });
      REQUIRE(poisson_raw_moment(l).evaluate(lambda) == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("Poisson central moments") {
  CHECK(poisson_central_moment(0) == MomentPolynomial({1}));
  CHECK(poisson_central_moment(1).is_zero());
  CHECK(poisson_central_moment(2) == MomentPolynomial({0, 1}));
  CHECK(poisson_central_moment(4) == MomentPolynomial({0, 1, 3}));
  for (unsigned k = 0; k <= 12; ++k) {
    const MomentPolynomial mu = poisson_central_moment(k);
    REQUIRE(mu == central_moment_by_recurrence(k));
    REQUIRE(mu.degree() <= static_cast<int>(k / 2));
    if (k % 2 == 0) REQUIRE(mu.coeff(k / 2) == gaussian_moment(k));
    const double lambda = 3.0;
    const double direct = poisson_sum(lambda, [&](double x) { return std::pow(x - lambda, k); });
    REQUIRE(mu.evaluate(lambda) == doctest::Approx(direct).epsilon(1e-8));
  }
  CHECK(poisson_central_moment(4).to_string() == "l + 3l^2");
}

TEST_CASE("Stein-Chen identity") {
  for (unsigned l = 0; l <= 12; ++l) REQUIRE(stein_chen_check(l));
}

TEST_CASE("Gaussian coefficient sums") {
  for (std::uint64_t X : {1, 2, 7, 1000, 123456789}) CHECK(gaussian_coefficient_sum(2, X) == 1);
  CHECK(gaussian_coefficient_sum(4, 10) == Rational(14, 5));
  CHECK(gaussian_coefficient_sum(3, 10) == 0);
  for (unsigned k : {2, 4, 6})
    for (unsigned X : {1, 2, 3, 5}) {
      Rational expected(even_tuples(k, X));
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), X, k / 2);
      expected /= Rational(scale);
      REQUIRE(gaussian_coefficient_sum(k, X) == expected);
    }
  // k = 4: 3 - 2/X
  CHECK(gaussian_coefficient_sum(4, 64) == Rational(Rational(3) - Rational(1, 32)));
}

TEST_CASE("sign patterns and sigma squared") {
  CHECK(sigma_squared(SignPattern::parse("+")) == Rational(1, 4));
  CHECK(sigma_squared(SignPattern::parse("++")) == Rational(5, 16));
  CHECK(sigma_squared(SignPattern::parse("+-")) == Rational(1, 16));
  CHECK(sigma_squared(SignPattern::parse("1,-1")) == Rational(1, 16));
  CHECK(SignPattern::parse("+-").to_string() == "+-");
  CHECK(SignPattern::parse("+-").bits() == 1);
  CHECK(SignPattern::from_bits(3, 5).to_string() == "+-+");
  CHECK_THROWS(SignPattern::parse("+x"));
  CHECK_THROWS_AS(SignPattern(std::vector<int>{}), DomainError);
  for (unsigned s = 1; s <= 4; ++s)
    for (unsigned b = 0; b < (1u << s); ++b) {
      const SignPattern eps = SignPattern::from_bits(s, b);
      REQUIRE(sigma_squared(eps) == sigma_squared(eps.negated()));
      REQUIRE(sigma_squared(eps) == iid_covariance_sum(eps));
      REQUIRE(sigma_squared(eps) >= 0);
    }
}

TEST_CASE("even multiset counts") {
  CHECK(multiset_even_tuple_count({0b1}, 1, 10) == 0);
  CHECK(multiset_even_tuple_count({0b11}, 2, 10) == 0);
  CHECK(multiset_even_tuple_count({0b1, 0b1}, 2, 10) == 10);
  CHECK(multiset_even_tuple_count({0b01, 0b10}, 2, 10) == 9);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 150; ++i) {
    const unsigned s = 1 + rng() % 3;
    const unsigned k = 1 + rng() % 4;
    std::vector<unsigned> subsets;
    for (unsigned j = 0; j < k; ++j) subsets.push_back(1 + rng() % ((1u << s) - 1));
    const unsigned X = 1 + rng() % 9;
    REQUIRE(multiset_even_tuple_count_exhaustive(subsets, s, X) ==
            multiset_even_tuple_count_clustered(subsets, s, X));
  }
  // large X goes through the clustered count: k=2, T1=T2={1} gives X
  CHECK(multiset_even_tuple_count({0b1, 0b1}, 2, 1'000'000'000) == 1'000'000'000);
  // four copies of {1}: pairs matched (3 ways) minus overcount of all equal (2X)
  const BigInt X = 100'000;
  CHECK(multiset_even_tuple_count({1, 1, 1, 1}, 1, 100'000) == BigInt(3 * X * X - 2 * X));
}
