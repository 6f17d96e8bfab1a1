#include "polynt/polynomial.hpp"

#include "polynt/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polynt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 residue(std::int64_t v, u64 p) {
  const auto m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(';', start);
    const std::string_view piece =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    coeffs.push_back(parse_big_integer(piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

bool IntPolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ';';
    out += coeffs_[i].get_str();
  }
  return out;
}

BigInt eval(const IntPolynomial& f, const BigInt& n) {
  const auto& c = f.coeffs();
  BigInt acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc *= n;
    acc += c[i];
  }
  return acc;
}

BigInt eval(const IntPolynomial& f, std::int64_t n) { return eval(f, from_i64(n)); }

std::vector<std::uint64_t> coeffs_mod(const IntPolynomial& f, std::uint64_t p) {
  std::vector<u64> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(mod_u64(c, p));
  return out;
}

std::uint64_t eval_mod(std::span<const std::uint64_t> reduced, std::uint64_t x, std::uint64_t p) {
  u64 acc = 0;
  for (std::size_t i = reduced.size(); i-- > 0;) acc = (mulmod(acc, x, p) + reduced[i]) % p;
  return acc;
}

IntPolynomial reduce_mod(const IntPolynomial& f, const BigInt& M) {
  if (M < 1) throw DomainError("reduce_mod requires M >= 1");
  std::vector<BigInt> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    out.push_back(std::move(r));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial shift_argument(const IntPolynomial& f, std::int64_t c) {
  // Horner in the ring Z[x]: acc = acc * (x + c) + a_i
  const std::size_t n = f.coeffs().size();
  std::vector<BigInt> acc(n);
  const BigInt cc = from_i64(c);
  for (std::size_t i = n; i-- > 0;) {
    std::vector<BigInt> next(n);
    for (std::size_t j = 0; j + 1 < n; ++j) next[j + 1] += acc[j];
    for (std::size_t j = 0; j < n; ++j) next[j] += acc[j] * cc;
    next[0] += f[i];
    acc = std::move(next);
  }
  return IntPolynomial(std::move(acc));
}

// ---- sampling ----

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
  auto mix = [](u64 z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(master + 0x9e3779b97f4a7c15ULL * (mix(index + 0x632be59bd9b4e019ULL) | 1));
}

BigInt uniform_below_or_equal(std::mt19937_64& rng, const BigInt& bound) {
  if (sgn(bound) < 0) throw DomainError("uniform_below_or_equal: negative bound");
  if (sgn(bound) == 0) return 0;
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const u64 top_mask = top_bits == 64 ? ~u64{0} : ((u64{1} << top_bits) - 1);
  BigInt candidate;
  for (;;) {
    candidate = rng() & top_mask;
    for (std::size_t w = 1; w < words; ++w) {
      candidate <<= 64;
      candidate += from_u64(rng());
    }
    if (candidate <= bound) return candidate;
  }
}

PolySampler::PolySampler(const PolySampleSpec& spec, std::uint64_t stream_index)
    : spec_(spec), rng_(derive_stream_seed(spec.seed, stream_index)) {
  if (sgn(spec_.H) < 0) throw DomainError("PolySampleSpec: H must be nonnegative");
}

IntPolynomial PolySampler::next() {
  std::vector<BigInt> coeffs;
  coeffs.reserve(spec_.d + 1);
  const BigInt width = 2 * spec_.H;
  for (unsigned j = 0; j <= spec_.d; ++j) coeffs.push_back(uniform_below_or_equal(rng_, width) - spec_.H);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial PolySampler::next_in_class(const IntPolynomial& f0, const BigInt& M) {
  if (M < 1) throw DomainError("residue class modulus must be >= 1");
  if (f0.degree_bound() != spec_.d)
    throw DomainError("residue class representative must have degree bound d");
  std::vector<BigInt> coeffs;
  coeffs.reserve(spec_.d + 1);
  for (unsigned j = 0; j <= spec_.d; ++j) {
    // smallest member of [-H, H] congruent to f0[j]
    BigInt offset;
    const BigInt diff = f0[j] + spec_.H;
    mpz_fdiv_r(offset.get_mpz_t(), diff.get_mpz_t(), M.get_mpz_t());
    const BigInt lo = offset - spec_.H;
    if (lo > spec_.H) throw DomainError("residue class has no member with |a| <= H");
    BigInt count;
    const BigInt span = spec_.H - lo;
    mpz_fdiv_q(count.get_mpz_t(), span.get_mpz_t(), M.get_mpz_t());
    coeffs.push_back(lo + uniform_below_or_equal(rng_, count) * M);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial sample_uniform(const PolySampleSpec& spec, std::uint64_t stream_index) {
  return PolySampler(spec, stream_index).next();
}

// ---- counting over F_p ----

bool is_zero_poly_mod_p(const IntPolynomial& f, std::uint64_t p) {
  const auto reduced = coeffs_mod(f, p);
  if (p > f.degree_bound())
    return std::all_of(reduced.begin(), reduced.end(), [](u64 c) { return c == 0; });
  for (u64 x = 0; x < p; ++x)
    if (eval_mod(reduced, x, p) != 0) return false;
  return true;
}

std::uint64_t count_unit_values_mod_p(const IntPolynomial& f, std::uint64_t p,
                                      std::span<const std::int64_t> shifts) {
  if (shifts.empty()) throw DomainError("count_unit_values_mod_p: shifts must be nonempty");
  const auto reduced = coeffs_mod(f, p);
  std::vector<u64> offsets;
  offsets.reserve(shifts.size());
  for (auto l : shifts) offsets.push_back(residue(l, p));
  // Values of f on F_p, then test each x against all shifts.
  std::vector<bool> unit(p);
  for (u64 y = 0; y < p; ++y) unit[y] = eval_mod(reduced, y, p) != 0;
  u64 count = 0;
  for (u64 x = 0; x < p; ++x) {
    bool all = true;
    for (u64 o : offsets) {
      u64 y = x + o;
      if (y >= p) y -= p;
      if (!unit[y]) {
        all = false;
        break;
      }
    }
    count += all;
  }
  return count;
}

namespace {

std::vector<std::vector<u64>> node_powers(std::span<const std::int64_t> nodes, unsigned d, u64 p) {
  std::vector<std::vector<u64>> rows;
  rows.reserve(nodes.size());
  for (auto n : nodes) {
    std::vector<u64> row(d + 1);
    const u64 base = residue(n, p);
    u64 pw = 1 % p;
    for (unsigned j = 0; j <= d; ++j) {
      row[j] = pw;
      pw = mulmod(pw, base, p);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

u64 inverse_mod(u64 a, u64 p) {
  u64 result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

unsigned rank_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  unsigned rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const u64 inv = inverse_mod(rows[rank][c], p);
    for (auto& v : rows[rank]) v = mulmod(v, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const u64 factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = (rows[r][k] + p - mulmod(factor, rows[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

bool pow_fits(u64 p, unsigned e, u64 cap) {
  u128 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    acc *= p;
    if (acc > cap) return false;
  }
  return true;
}

}  // namespace

unsigned vandermonde_rank_mod_p(std::span<const std::int64_t> nodes, unsigned d, std::uint64_t p) {
  return rank_mod_p(node_powers(nodes, d, p), p);
}

std::uint64_t count_unit_tuples_by_enumeration(std::span<const std::int64_t> nodes, unsigned d,
                                               std::uint64_t p) {
  const auto rows = node_powers(nodes, d, p);
  std::vector<u64> a(d + 1, 0);
  u64 count = 0;
  for (;;) {
    bool all = true;
    for (const auto& row : rows) {
      u64 v = 0;
      for (unsigned j = 0; j <= d; ++j) v = (v + mulmod(a[j], row[j], p)) % p;
      if (v == 0) {
        all = false;
        break;
      }
    }
    count += all;
    unsigned j = 0;
    while (j <= d && ++a[j] == p) a[j++] = 0;
    if (j > d) break;
  }
  return count;
}

std::uint64_t count_unit_tuples_by_inclusion_exclusion(std::span<const std::int64_t> nodes,
                                                       unsigned d, std::uint64_t p) {
  const std::size_t t = nodes.size();
  if (t > 24) throw BudgetError("inclusion-exclusion over more than 24 forms");
  const auto rows = node_powers(nodes, d, p);
  BigInt total = 0;
  for (u64 mask = 0; mask < (u64{1} << t); ++mask) {
    std::vector<std::vector<u64>> subset;
    for (std::size_t i = 0; i < t; ++i)
      if (mask >> i & 1) subset.push_back(rows[i]);
    const unsigned rank = rank_mod_p(std::move(subset), p);
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), p, d + 1 - rank);
    if (std::popcount(mask) % 2) total -= term;
    else total += term;
  }
  if (!fits_u64(total)) throw BudgetError("unit tuple count does not fit in 64 bits");
  return to_u64(total);
}

std::uint64_t count_unit_tuples_linear_system(std::span<const std::int64_t> nodes, unsigned d,
                                              std::uint64_t p, std::uint64_t enumeration_cap) {
  if (nodes.empty()) throw DomainError("count_unit_tuples_linear_system: no nodes");
  if (pow_fits(p, d + 1, enumeration_cap)) return count_unit_tuples_by_enumeration(nodes, d, p);
  if (nodes.size() > 24)
    throw BudgetError("neither enumeration nor inclusion-exclusion is within budget");
  return count_unit_tuples_by_inclusion_exclusion(nodes, d, p);
}

}  // namespace polynt
