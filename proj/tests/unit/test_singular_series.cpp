#include <doctest.h>

#include "polynt/errors.hpp"
#include "polynt/singular_series.hpp"

#include <random>

using namespace polynt;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, unsigned d, long H) {
  std::vector<BigInt> c;
  for (unsigned j = 0; j <= d; ++j) c.emplace_back(static_cast<long>(rng() % (2 * H + 1)) - H);
  return IntPolynomial(c);
}

bool naive_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// prod_{p <= w} (#{x mod p : f(x + l_i) != 0 all i} / p) / (1 - 1/p)^k, by BigInt evaluation
Rational oracle_tuple_series(const IntPolynomial& f, const std::vector<std::int64_t>& shifts, std::uint64_t w) {
  Rational value = 1;
  for (std::uint64_t p = 2; p <= w; ++p) {
    if (!naive_prime(p)) continue;
    long count = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      bool ok = true;
      for (auto l : shifts) ok = ok && mod_u64(eval(f, static_cast<std::int64_t>(x) + l), p) != 0;
      count += ok;
    }
    Rational factor(count, static_cast<long>(p));
    for (std::size_t i = 0; i < shifts.size(); ++i) factor /= Rational(static_cast<long>(p - 1), static_cast<long>(p));
    value *= factor;
  }
  value.canonicalize();
  return value;
}

}  // namespace

TEST_CASE("primes and primorial") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(13) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
  CHECK(primorial(1).value == 1);
  CHECK(primorial(10).value == 210);
  CHECK(primorial(13).value == 30030);
}

TEST_CASE("series_f examples") {
  CHECK(series_f(IntPolynomial::parse("0;1"), 50).value == 1);
  CHECK(series_f(IntPolynomial::parse("2;1;1"), 2).value == 0);
  const TruncatedSeries s = series_f(IntPolynomial::parse("1;0;1"), 3);
  CHECK(s.value == Rational(3, 2));
  REQUIRE(s.local_factors.size() == 2);
  CHECK(s.local_factors[0].prime == 2);
  CHECK(s.local_factors[0].factor == 1);
  CHECK(s.local_factors[1].factor == Rational(3, 2));
}

TEST_CASE("series_f_tuple examples") {
  const IntPolynomial x = IntPolynomial::parse("0;1");
  const std::int64_t z[] = {0};
  const std::int64_t z1[] = {0, 1};
  const std::int64_t z2[] = {0, 2};
  CHECK(series_f_tuple(x, z, 29).value == 1);
  CHECK(series_f_tuple(x, z1, 2).value == 0);
  const TruncatedSeries twin = series_f_tuple(x, z2, 3);
  CHECK(twin.local_factors[0].factor == 2);
  CHECK(twin.local_factors[1].factor == Rational(3, 4));
  CHECK(twin.value == Rational(3, 2));
}

TEST_CASE("series against the brute-force oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const IntPolynomial f = random_poly(rng, 1 + rng() % 3, 100);
    const std::uint64_t w = 2 + rng() % 20;
    std::vector<std::int64_t> shifts{0};
    if (i % 2) shifts.push_back(1 + static_cast<std::int64_t>(rng() % 5));
    REQUIRE(series_f_tuple(f, shifts, w).value == oracle_tuple_series(f, shifts, w));
    Rational product = 1;
    for (const auto& lf : series_f_tuple(f, shifts, w).local_factors) product *= lf.factor;
    REQUIRE(product == series_f_tuple(f, shifts, w).value);
  }
}

TEST_CASE("series bounds and the zero dichotomy") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const unsigned d = 1 + rng() % 3;
    const IntPolynomial f = random_poly(rng, d, 60);
    const std::uint64_t w = 2 + rng() % 49;
    const TruncatedSeries s = series_f(f, w);
    Rational upper = 1, lower = 1;
    bool some_zero = false;
    for (std::uint64_t p : primes_up_to(w)) {
      const Rational inv(static_cast<long>(p - 1), static_cast<long>(p));
      upper /= inv;
      const long m = std::min<long>(d, static_cast<long>(p) - 1);
      lower *= Rational(static_cast<long>(p) - m, static_cast<long>(p)) / inv;
      some_zero = some_zero || is_zero_poly_mod_p(f, p);
    }
    REQUIRE(s.value <= upper);
    REQUIRE((sgn(s.value) == 0) == some_zero);
    if (sgn(s.value) != 0) REQUIRE(s.value >= lower);
    // depends only on f mod P(w)
    REQUIRE(series_f(reduce_mod(f, primorial(w).value), w).value == s.value);
  }
}

TEST_CASE("tuple series upper bound and shift invariance") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const IntPolynomial f = random_poly(rng, 1 + rng() % 3, 60);
    const std::uint64_t w = 2 + rng() % 49;
    std::vector<std::int64_t> shifts;
    const unsigned k = 1 + rng() % 3;
    while (shifts.size() < k) {
      const std::int64_t l = static_cast<std::int64_t>(rng() % 11) - 5;
      if (std::find(shifts.begin(), shifts.end(), l) == shifts.end()) shifts.push_back(l);
    }
    Rational upper = 1;
    for (std::uint64_t p : primes_up_to(w))
      for (unsigned j = 0; j < k; ++j) upper /= Rational(static_cast<long>(p - 1), static_cast<long>(p));
    REQUIRE(series_f_tuple(f, shifts, w).value <= upper);
    const std::int64_t c = static_cast<std::int64_t>(rng() % 101) - 50;
    const std::int64_t single[] = {c};
    REQUIRE(series_f_tuple(f, single, w).value == series_f(shift_argument(f, c), w).value);
  }
}

TEST_CASE("linear-system series") {
  const std::int64_t n1[] = {1};
  const IntPolynomial zero1 = IntPolynomial::zero(1);
  CHECK(series_linear_system(n1, zero1, 1, 2).value == 1);
  const std::int64_t n01[] = {0, 1};
  CHECK(series_linear_system(n01, zero1, 1, 3).value == 1);
  // f0(1) = 2 vanishes mod 2
  CHECK(series_linear_system(n1, IntPolynomial::parse("1;1"), 2, 3).value == 0);
  // f0(1) = 1 is a unit mod 2: factor 1/(1/2) at p = 2, then p = 3 factor 1
  CHECK(series_linear_system(n1, IntPolynomial::parse("1;0"), 2, 3).value == 2);
  CHECK_THROWS_AS(series_linear_system(n1, zero1, 5, 3), DomainError);
  const std::int64_t dup[] = {1, 1};
  CHECK_THROWS_AS(series_linear_system(dup, zero1, 1, 3), DomainError);

  // oracle: enumerate coefficient vectors in the class mod p
  const std::int64_t nodes[] = {1, 2, 4};
  const IntPolynomial f0 = IntPolynomial::parse("1;3");
  const BigInt M = 3;
  Rational expected = 1;
  for (std::uint64_t p : primes_up_to(7)) {
    long good = 0, total = 0;
    for (std::uint64_t a0 = 0; a0 < p; ++a0)
      for (std::uint64_t a1 = 0; a1 < p; ++a1) {
        if (p == 3 && (mod_u64(f0[0], 3) != a0 || mod_u64(f0[1], 3) != a1)) continue;
        ++total;
        bool ok = true;
        for (auto n : nodes) ok = ok && (a0 + a1 * static_cast<std::uint64_t>(n)) % p != 0;
        good += ok;
      }
    Rational factor(good, total);
    for (int i = 0; i < 3; ++i) factor /= Rational(static_cast<long>(p - 1), static_cast<long>(p));
    expected *= factor;
  }
  expected.canonicalize();
  CHECK(series_linear_system(nodes, f0, M, 7).value == expected);
}

TEST_CASE("interchange identity") {
  const IntPolynomial x = IntPolynomial::parse("0;1");
  const InterchangeSides sides = interchange_identity_sides(x, 3, 2);
  CHECK(sides.lhs == 12);
  CHECK(sides.rhs == 12);
  CHECK(interchange_identity_check(IntPolynomial::parse("5;10"), 5, 1));
  CHECK(interchange_identity_sides(IntPolynomial::parse("5;10"), 5, 1).lhs == 0);
  CHECK(interchange_identity_check(IntPolynomial::parse("1;0;1"), 5, 2));
  CHECK_THROWS_AS(interchange_identity_sides(x, 13, 3, 100), BudgetError);
}

TEST_CASE("tuple-sum identity residual") {
  const IntPolynomial x = IntPolynomial::parse("0;1");
  CHECK(tuple_sum_identity_residual(x, 2, 1, 2) == 0);

  // direct summation oracle over ordered distinct pairs in [1, 4]
  Rational direct = 0;
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = 1; b <= 4; ++b)
      if (a != b) direct += oracle_tuple_series(x, {a, b}, 2);
  const Rational expected = Rational(16) - direct;
  CHECK(tuple_sum_identity_residual(x, 4, 2, 2) == expected);
  CHECK(expected == 8);

  // Over whole periods of P(3) = 6 the off-diagonal pairs average to S_f^2,
  // so the residual is exactly linear in L.
  const IntPolynomial g = IntPolynomial::parse("1;0;1");
  const Rational base = tuple_sum_identity_residual(g, 6, 2, 3) / 6;
  for (std::uint64_t m : {2, 4}) {
    const Rational ratio = tuple_sum_identity_residual(g, 6 * m, 2, 3) / Rational(static_cast<long>(6 * m));
    CHECK(ratio == base);
  }
}
