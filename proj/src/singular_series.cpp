#include "polynt/singular_series.hpp"

#include "polynt/arithmetic.hpp"
#include "polynt/errors.hpp"

#include <algorithm>
#include <map>

namespace polynt {

namespace {

using u64 = std::uint64_t;

Rational one_minus_inverse_pow(u64 p, std::size_t k) {
  Rational base(from_u64(p - 1), from_u64(p));
  Rational out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= base;
  return out;
}

void push_factor(TruncatedSeries& s, u64 p, Rational factor) {
  factor.canonicalize();
  s.value *= factor;
  s.local_factors.push_back({p, std::move(factor)});
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t w) {
  std::vector<u64> out;
  if (w < 2) return out;
  std::vector<bool> composite(w + 1, false);
  for (u64 i = 2; i <= w; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= w; j += i) composite[j] = true;
  }
  return out;
}

Primorial primorial(std::uint64_t w) {
  Primorial P{w, 1};
  for (u64 p : primes_up_to(w)) P.value *= from_u64(p);
  return P;
}

TruncatedSeries series_f(const IntPolynomial& f, std::uint64_t w) {
  const std::int64_t zero_shift[] = {0};
  return series_f_tuple(f, zero_shift, w);
}

TruncatedSeries series_f_tuple(const IntPolynomial& f, std::span<const std::int64_t> shifts,
                               std::uint64_t w) {
  if (shifts.empty()) throw DomainError("series_f_tuple: shifts must be nonempty");
  TruncatedSeries s;
  s.w = w;
  for (u64 p : primes_up_to(w)) {
    const u64 count = count_unit_values_mod_p(f, p, shifts);
    push_factor(s, p, make_rational(from_u64(count), from_u64(p)) / one_minus_inverse_pow(p, shifts.size()));
  }
  return s;
}

TruncatedSeries series_linear_system(std::span<const std::int64_t> nodes, const IntPolynomial& f0,
                                     const BigInt& M, std::uint64_t w) {
  if (nodes.empty()) throw DomainError("series_linear_system: nodes must be nonempty");
  if (M < 1) throw DomainError("series_linear_system: M must be >= 1");
  {
    std::vector<std::int64_t> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("series_linear_system: nodes must be distinct");
  }
  // Every prime factor of M must be covered by the truncation.
  for (const auto& pf : factorize(M).factors)
    if (pf.prime > from_u64(w))
      throw DomainError("series_linear_system: M has prime factor " + pf.prime.get_str() +
                        " above w = " + std::to_string(w));

  const unsigned d = f0.degree_bound();
  const std::size_t t = nodes.size();
  TruncatedSeries s;
  s.w = w;
  for (u64 p : primes_up_to(w)) {
    if (mpz_divisible_ui_p(M.get_mpz_t(), p)) {
      const auto reduced = coeffs_mod(f0, p);
      bool all_units = true;
      for (auto n : nodes) {
        const u64 x = mod_u64(from_i64(n), p);
        if (eval_mod(reduced, x, p) == 0) all_units = false;
      }
      push_factor(s, p, all_units ? Rational(1) / one_minus_inverse_pow(p, t) : Rational(0));
    } else {
      const u64 count = count_unit_tuples_linear_system(nodes, d, p);
      BigInt volume;
      mpz_ui_pow_ui(volume.get_mpz_t(), p, d + 1);
      push_factor(s, p, make_rational(from_u64(count), volume) / one_minus_inverse_pow(p, t));
    }
  }
  return s;
}

InterchangeSides interchange_identity_sides(const IntPolynomial& f, std::uint64_t p, unsigned r,
                                            std::uint64_t budget) {
  BigInt work;
  mpz_ui_pow_ui(work.get_mpz_t(), p, r + 1);
  if (work > from_u64(budget))
    throw BudgetError("interchange identity: p^(r+1) exceeds enumeration budget");

  const auto reduced = coeffs_mod(f, p);
  std::vector<bool> unit(p);
  u64 units = 0;
  for (u64 y = 0; y < p; ++y) {
    unit[y] = eval_mod(reduced, y, p) != 0;
    units += unit[y];
  }
  // LHS: for every shift vector l in F_p^r, count x with f(x + l_i) a unit.
  u64 lhs = 0;
  std::vector<u64> l(r, 0);
  for (;;) {
    for (u64 x = 0; x < p; ++x) {
      bool all = true;
      for (u64 li : l)
        if (!unit[(x + li) % p]) {
          all = false;
          break;
        }
      lhs += all;
    }
    unsigned i = 0;
    while (i < r && ++l[i] == p) l[i++] = 0;
    if (i == r) break;
  }
  BigInt rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), units, r);
  rhs *= from_u64(p);
  return {from_u64(lhs), rhs};
}

bool interchange_identity_check(const IntPolynomial& f, std::uint64_t p, unsigned r,
                                std::uint64_t budget) {
  const auto sides = interchange_identity_sides(f, p, r, budget);
  return sides.lhs == sides.rhs;
}

Rational tuple_sum_identity_residual(const IntPolynomial& f, std::uint64_t L, unsigned r,
                                     std::uint64_t w, std::uint64_t budget) {
  if (L == 0 || r == 0) throw DomainError("tuple_sum_identity_residual: L, r must be positive");
  BigInt tuples;
  mpz_ui_pow_ui(tuples.get_mpz_t(), L, r);
  if (tuples > from_u64(budget)) throw BudgetError("tuple_sum_identity_residual: L^r over budget");

  // S_{f,l}(w) depends on l only modulo the primorial; memoize on residues.
  const BigInt P = primorial(w).value;
  const bool memo = fits_u64(P);
  const u64 Pm = memo ? to_u64(P) : 0;
  std::map<std::vector<u64>, Rational> cache;

  Rational sum = 0;
  std::vector<std::int64_t> l(r, 1);
  for (;;) {
    std::vector<std::int64_t> sorted(l);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      if (memo) {
        std::vector<u64> key;
        key.reserve(r);
        for (auto li : l) key.push_back(static_cast<u64>(li) % Pm);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, series_f_tuple(f, l, w).value).first;
        sum += it->second;
      } else {
        sum += series_f_tuple(f, l, w).value;
      }
    }
    unsigned i = 0;
    while (i < r && ++l[i] > static_cast<std::int64_t>(L)) l[i++] = 1;
    if (i == r) break;
  }
  Rational main_term = Rational(from_u64(L)) * series_f(f, w).value;
  Rational power = 1;
  for (unsigned i = 0; i < r; ++i) power *= main_term;
  Rational residual = power - sum;
  residual.canonicalize();
  return residual;
}

}  // namespace polynt
