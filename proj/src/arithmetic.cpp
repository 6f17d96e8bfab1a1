#include "polynt/arithmetic.hpp"

#include "polynt/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <new>
#include <numeric>

namespace polynt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Primes below 1024, used for trial division ahead of the heavy kernels.
const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    std::vector<bool> composite(1024, false);
    for (u64 i = 2; i < 1024; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j < 1024; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}
constexpr u64 kTrialLimit = 1024;

u64 splitmix64(u64& state) {
  u64 z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Montgomery arithmetic modulo an odd 64-bit n.
class Montgomery {
 public:
  explicit Montgomery(u64 n) : n_(n) {
    u64 inv = n;  // Newton iteration for n^{-1} mod 2^64
    for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
    inv_ = inv;
    one_ = (-n) % n;  // 2^64 mod n
    r2_ = static_cast<u64>(static_cast<u128>(one_) * one_ % n);
  }

  u64 modulus() const { return n_; }
  u64 one() const { return one_; }
  u64 minus_one() const { return n_ - one_; }
  u64 to_mont(u64 a) const { return mul(a % n_, r2_); }

  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * inv_;
    const u64 hi = static_cast<u64>(t >> 64);
    const u64 mn = static_cast<u64>((static_cast<u128>(m) * n_) >> 64);
    return hi >= mn ? hi - mn : hi - mn + n_;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    if (s < a || s >= n_) s -= n_;
    return s;
  }
  u64 pow(u64 base, u64 e) const {
    u64 result = one_;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

 private:
  u64 n_, inv_, one_, r2_;
};

bool miller_rabin_u64(u64 n) {
  // n odd, n > kTrialLimit^0 handled by caller
  const Montgomery mont(n);
  u64 d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (u64 a : kWitnesses) {
    if (a % n == 0) continue;
    u64 x = mont.pow(mont.to_mont(a), d);
    if (x == mont.one() || x == mont.minus_one()) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mont.mul(x, x);
      if (x == mont.minus_one()) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 iroot(u64 n, unsigned k) {
  u64 r = static_cast<u64>(std::llround(std::pow(static_cast<long double>(n), 1.0L / k)));
  auto pow_le = [&](u64 base) {  // base^k <= n without overflow
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= base;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

bool exact_power(u64 n, unsigned k, u64& root) {
  root = iroot(n, k);
  u128 acc = 1;
  for (unsigned i = 0; i < k; ++i) acc *= root;
  return acc == n;
}

class IterationBudget {
 public:
  explicit IterationBudget(u64 cap) : cap_(cap) {}
  void spend(u64 n) {
    used_ += n;
    if (used_ > cap_)
      throw BudgetError("factor splitting exceeded iteration cap of " + std::to_string(cap_));
  }

 private:
  u64 cap_;
  u64 used_ = 0;
};

// Brent's variant of Pollard rho. n odd composite, not a perfect power.
u64 brent_split(u64 n, u64 seed, IterationBudget& budget) {
  const Montgomery mont(n);
  u64 state = seed ^ (n * 0x9e3779b97f4a7c15ULL);
  constexpr u64 kBatch = 128;
  for (;;) {
    const u64 c = mont.to_mont(splitmix64(state) % (n - 1) + 1);
    u64 y = mont.to_mont(splitmix64(state) % n);
    u64 x = y, ys = y, q = mont.one(), g = 1;
    auto step = [&](u64 v) { return mont.add(mont.mul(v, v), c); };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      budget.spend(r);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mont.mul(q, x > y ? x - y : y - x);
        }
        budget.spend(lim);
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        budget.spend(1);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(u64 m, const FactorOptions& opts, IterationBudget& budget,
               std::map<u64, unsigned>& out, unsigned multiplicity);

// m has no prime factor below kTrialLimit.
void split_large_u64(u64 m, const FactorOptions& opts, IterationBudget& budget,
                     std::map<u64, unsigned>& out, unsigned multiplicity) {
  if (m == 1) return;
  if (opts.table != nullptr && opts.table->covers(m)) {
    split_u64(m, opts, budget, out, multiplicity);
    return;
  }
  if (is_prime(m)) {
    out[m] += multiplicity;
    return;
  }
  // m >= 1031^2, so exponents above 6 are impossible; composite exponents
  // are reached through repeated roots.
  for (unsigned k : {2u, 3u, 5u}) {
    u64 root = 0;
    if (exact_power(m, k, root)) {
      split_large_u64(root, opts, budget, out, multiplicity * k);
      return;
    }
  }
  const u64 d = brent_split(m, opts.seed, budget);
  split_large_u64(d, opts, budget, out, multiplicity);
  split_large_u64(m / d, opts, budget, out, multiplicity);
}

void split_u64(u64 m, const FactorOptions& opts, IterationBudget& budget,
               std::map<u64, unsigned>& out, unsigned multiplicity) {
  if (opts.table != nullptr && opts.table->covers(m)) {
    while (m > 1) {
      const u64 p = opts.table->spf(m);
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out[p] += e * multiplicity;
    }
    return;
  }
  for (u64 p : small_primes()) {
    if (p * p > m) break;
    if (m % p != 0) continue;
    unsigned e = 0;
    do {
      m /= p;
      ++e;
    } while (m % p == 0);
    out[p] += e * multiplicity;
  }
  if (m > 1 && m < kTrialLimit * kTrialLimit) {
    out[m] += multiplicity;  // no factor below sqrt(m) remains
    return;
  }
  split_large_u64(m, opts, budget, out, multiplicity);
}

// ---- large integers ----

const BigInt& deterministic_mr_limit() {
  static const BigInt limit("3317044064679887385961981");
  return limit;
}

bool miller_rabin_base(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s) {
  const BigInt n_minus_1 = n - 1;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

bool is_prime_big(const BigInt& n) {
  // n > 2^64, odd, no small factors
  BigInt d = n - 1;
  const unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  if (n < deterministic_mr_limit()) {
    for (u64 a : kWitnesses)
      if (!miller_rabin_base(n, from_u64(a), d, s)) return false;
    return true;
  }
  u64 state = kDefaultSplitSeed ^ mpz_getlimbn(n.get_mpz_t(), 0);
  const BigInt span = n - 3;
  for (int round = 0; round < 64; ++round) {
    BigInt a = 0;
    for (int limb = 0; limb < static_cast<int>(mpz_size(n.get_mpz_t())) + 1; ++limb) {
      a <<= 64;
      a += from_u64(splitmix64(state));
    }
    a = a % span + 2;
    if (!miller_rabin_base(n, a, d, s)) return false;
  }
  return true;
}

BigInt brent_split_big(const BigInt& n, u64 seed, IterationBudget& budget) {
  u64 state = seed ^ mpz_getlimbn(n.get_mpz_t(), 0);
  constexpr u64 kBatch = 128;
  for (;;) {
    const BigInt c = from_u64(splitmix64(state)) % (n - 1) + 1;
    BigInt y = from_u64(splitmix64(state)) % n;
    BigInt x = y, ys = y, q = 1, g = 1, diff;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      v %= n;
    };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) step(y);
      budget.spend(r);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          step(y);
          diff = abs(x - y);
          q = q * diff % n;
        }
        budget.spend(lim);
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        step(ys);
        budget.spend(1);
        diff = abs(x - ys);
        g = gcd(diff, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_big(const BigInt& m, const FactorOptions& opts, IterationBudget& budget,
               std::map<BigInt, unsigned>& out, unsigned multiplicity) {
  if (m == 1) return;
  if (fits_u64(m)) {
    std::map<u64, unsigned> small;
    split_u64(to_u64(m), opts, budget, small, multiplicity);
    for (auto [p, e] : small) out[from_u64(p)] += e;
    return;
  }
  if (is_prime_big(m)) {
    out[m] += multiplicity;
    return;
  }
  if (mpz_perfect_power_p(m.get_mpz_t())) {
    const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    BigInt root;
    for (unsigned k = 2; k <= bits; ++k) {
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
        split_big(root, opts, budget, out, multiplicity * k);
        return;
      }
    }
  }
  const BigInt d = brent_split_big(m, opts.seed, budget);
  split_big(d, opts, budget, out, multiplicity);
  split_big(m / d, opts, budget, out, multiplicity);
}

double log_abs(const BigInt& n) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

u64 prime_power_base_u64(u64 m) {
  if (m < 2) return 0;
  for (u64 p : small_primes()) {
    if (p * p > m) return m;  // m itself is prime
    if (m % p != 0) continue;
    do m /= p;
    while (m % p == 0);
    return m == 1 ? p : 0;
  }
  if (is_prime(m)) return m;
  for (unsigned k : {2u, 3u, 5u}) {
    u64 root = 0;
    if (exact_power(m, k, root)) return prime_power_base_u64(root);
  }
  return 0;
}

}  // namespace

// ---- SpfTable ----

SpfTable::SpfTable(std::uint64_t bound) : bound_(bound) {
  if (bound < 2) throw DomainError("SpfTable bound must be at least 2");
  if (bound > 0xffff'ffffULL) throw ResourceError("SpfTable bound exceeds 32-bit entries");
  spf_.assign(bound + 1, 0);
  for (u64 i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const u64 limit = spf_[i];
    for (std::uint32_t p : primes_) {
      if (p > limit || p * i > bound) break;
      spf_[p * i] = p;
    }
  }
}

SpfTable build_spf_table(std::uint64_t bound) {
  try {
    return SpfTable(bound);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate smallest-prime-factor table up to " +
                        std::to_string(bound));
  } catch (const std::length_error&) {
    throw ResourceError("cannot allocate smallest-prime-factor table up to " +
                        std::to_string(bound));
  }
}

// ---- Factorization ----

BigInt Factorization::value() const {
  BigInt v = sign;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

unsigned Factorization::big_omega() const {
  unsigned total = 0;
  for (const auto& f : factors) total += f.exponent;
  return total;
}

// ---- primality ----

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : small_primes()) {
    if (p * p > n) return true;
    if (n % p == 0) return n == p;
  }
  return miller_rabin_u64(n);
}

bool is_prime(const BigInt& n) {
  if (auto m = abs_u64(n)) return is_prime(*m);
  const BigInt m = abs(n);
  for (u64 p : small_primes())
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
  return is_prime_big(m);
}

// ---- factorization ----

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n,
                                                           const FactorOptions& opts) {
  std::map<u64, unsigned> found;
  if (n >= 2) {
    IterationBudget budget(opts.iteration_cap);
    split_u64(n, opts, budget, found, 1);
  }
  return {found.begin(), found.end()};
}

Factorization factorize(const BigInt& n, const FactorOptions& opts) {
  Factorization result;
  result.sign = sgn(n);
  if (result.sign == 0) return result;
  if (auto m = abs_u64(n)) {
    for (auto [p, e] : factor_u64(*m, opts)) result.factors.push_back({from_u64(p), e});
    return result;
  }
  BigInt m = abs(n);
  std::map<BigInt, unsigned> found;
  for (u64 p : small_primes()) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[from_u64(p)] += e;
  }
  IterationBudget budget(opts.iteration_cap);
  split_big(m, opts, budget, found, 1);
  for (auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

// ---- arithmetic functions ----

int liouville(std::uint64_t n, const FactorOptions& opts) {
  if (n == 0) return 0;
  unsigned omega = 0;
  for (auto [p, e] : factor_u64(n, opts)) omega += e;
  return omega % 2 == 0 ? 1 : -1;
}

int liouville(const BigInt& n, const FactorOptions& opts) {
  if (auto m = abs_u64(n)) return liouville(*m, opts);
  return factorize(n, opts).big_omega() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n, const FactorOptions& opts) {
  if (n == 0) throw DomainError("mobius(0) is undefined");
  int result = 1;
  for (auto [p, e] : factor_u64(n, opts)) {
    if (e > 1) return 0;
    result = -result;
  }
  return result;
}

int mobius(const BigInt& n, const FactorOptions& opts) {
  if (sgn(n) == 0) throw DomainError("mobius(0) is undefined");
  if (auto m = abs_u64(n)) return mobius(*m, opts);
  int result = 1;
  for (const auto& f : factorize(n, opts).factors) {
    if (f.exponent > 1) return 0;
    result = -result;
  }
  return result;
}

BigInt prime_power_base(const BigInt& n) {
  if (auto m = abs_u64(n)) return from_u64(prime_power_base_u64(*m));
  BigInt m = abs(n);
  for (u64 p : small_primes()) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    mpz_remove(m.get_mpz_t(), m.get_mpz_t(), from_u64(p).get_mpz_t());
    return m == 1 ? from_u64(p) : BigInt(0);
  }
  if (is_prime_big(m)) return m;
  if (mpz_perfect_power_p(m.get_mpz_t())) {
    const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    BigInt root;
    for (unsigned k = 2; k <= bits; ++k)
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) return prime_power_base(root);
  }
  return 0;
}

double von_mangoldt(std::uint64_t n) {
  const u64 p = prime_power_base_u64(n);
  return p == 0 ? 0.0 : std::log(static_cast<double>(p));
}

double von_mangoldt(const BigInt& n) {
  if (auto m = abs_u64(n)) return von_mangoldt(*m);
  const BigInt p = prime_power_base(n);
  return sgn(p) == 0 ? 0.0 : log_abs(p);
}

double theta(const BigInt& n) { return is_prime(n) ? log_abs(n) : 0.0; }

bool lambda_from_mobius_check(std::uint64_t n, const FactorOptions& opts) {
  if (n == 0) throw DomainError("lambda_from_mobius_check requires n >= 1");
  // r^2 | n  <=>  r | prod p^{floor(e/2)}
  std::vector<u64> roots{1};
  for (auto [p, e] : factor_u64(n, opts)) {
    const std::size_t existing = roots.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e / 2; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < existing; ++i) roots.push_back(roots[i] * pk);
    }
  }
  int sum = 0;
  for (u64 r : roots) sum += mobius(n / (r * r), opts);
  return sum == liouville(n, opts);
}

}  // namespace polynt
