#include "polynt/moments.hpp"

#include "polynt/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace polynt {

// ---- MomentPolynomial ----

MomentPolynomial::MomentPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void MomentPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt MomentPolynomial::coeff(std::size_t r) const { return r < coeffs_.size() ? coeffs_[r] : BigInt(0); }

double MomentPolynomial::evaluate(double lambda) const {
  double acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * lambda + coeffs_[i].get_d();
  return acc;
}

std::string MomentPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t r = 0; r < coeffs_.size(); ++r) {
    if (sgn(coeffs_[r]) == 0) continue;
    if (!out.empty()) out += sgn(coeffs_[r]) > 0 ? " + " : " - ";
    else if (sgn(coeffs_[r]) < 0) out += "-";
    const BigInt mag = abs(coeffs_[r]);
    if (r == 0 || mag != 1) out += mag.get_str();
    if (r >= 1) out += "l";
    if (r >= 2) out += "^" + std::to_string(r);
  }
  return out;
}

MomentPolynomial& MomentPolynomial::operator+=(const MomentPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

MomentPolynomial& MomentPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

MomentPolynomial MomentPolynomial::shifted(unsigned k) const {
  if (coeffs_.empty()) return {};
  std::vector<BigInt> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return MomentPolynomial(std::move(out));
}

// ---- combinatorics ----

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt stirling2(unsigned k, unsigned r) {
  if (r > k) return 0;
  // Row-by-row: S(n, j) = j S(n-1, j) + S(n-1, j-1).
  std::vector<BigInt> row(r + 1, 0);
  row[0] = 1;
  for (unsigned n = 1; n <= k; ++n) {
    for (unsigned j = std::min(n, r); j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[r];
}

BigInt gaussian_moment(unsigned k) {
  if (k % 2) return 0;
  BigInt out = 1;
  for (unsigned j = k; j >= 2; j -= 2) out *= j - 1;
  return out;
}

MomentPolynomial poisson_raw_moment(unsigned l) {
  std::vector<BigInt> coeffs(l + 1);
  for (unsigned r = 0; r <= l; ++r) coeffs[r] = stirling2(l, r);
  return MomentPolynomial(std::move(coeffs));
}

MomentPolynomial central_moment_by_definition(unsigned k) {
  MomentPolynomial out;
  for (unsigned l = 0; l <= k; ++l) {
    MomentPolynomial term = poisson_raw_moment(l).shifted(k - l);
    BigInt scale = binomial(k, l);
    if ((k - l) % 2) scale = -scale;
    term *= scale;
    out += term;
  }
  return out;
}

MomentPolynomial central_moment_by_recurrence(unsigned k) {
  std::vector<MomentPolynomial> mu;
  mu.emplace_back(std::vector<BigInt>{1});
  mu.emplace_back();
  for (unsigned j = 2; j <= k; ++j) {
    MomentPolynomial acc;
    for (unsigned t = 0; t + 2 <= j; ++t) {
      MomentPolynomial term = mu[t];
      term *= binomial(j - 1, t);
      acc += term;
    }
    mu.push_back(acc.shifted(1));
  }
  return mu[k];
}

MomentPolynomial poisson_central_moment(unsigned k) {
  MomentPolynomial by_definition = central_moment_by_definition(k);
  if (by_definition != central_moment_by_recurrence(k))
    throw ConsistencyError("central moment definition and recurrence disagree at k = " +
                           std::to_string(k));
  return by_definition;
}

bool stein_chen_check(unsigned l) {
  MomentPolynomial rhs;
  for (unsigned s = 0; s <= l; ++s) {
    MomentPolynomial term = poisson_raw_moment(s);
    term *= binomial(l, s);
    rhs += term;
  }
  return poisson_raw_moment(l + 1) == rhs.shifted(1);
}

Rational gaussian_coefficient_sum(unsigned k, std::uint64_t X) {
  if (k == 0 || k % 2) return 0;
  BigInt k_factorial;
  mpz_fac_ui(k_factorial.get_mpz_t(), k);
  // weights[u]: sum over ordered compositions of k into u even parts of k!/prod l_i!
  std::vector<BigInt> weights(k / 2 + 1, 0);
  std::function<void(unsigned, unsigned, BigInt)> compose = [&](unsigned remaining, unsigned parts,
                                                                BigInt denom) {
    if (remaining == 0) {
      weights[parts] += k_factorial / denom;
      return;
    }
    for (unsigned l = 2; l <= remaining; l += 2) {
      BigInt lf;
      mpz_fac_ui(lf.get_mpz_t(), l);
      compose(remaining - l, parts + 1, denom * lf);
    }
  };
  compose(k, 0, 1);

  BigInt numerator = 0;
  for (unsigned u = 1; u <= k / 2; ++u) {
    BigInt choose;
    mpz_bin_ui(choose.get_mpz_t(), from_u64(X).get_mpz_t(), u);
    numerator += weights[u] * choose;
  }
  BigInt denominator;
  mpz_pow_ui(denominator.get_mpz_t(), from_u64(X).get_mpz_t(), k / 2);
  return make_rational(numerator, denominator);
}

// ---- sign patterns ----

SignPattern::SignPattern(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("sign pattern must have length >= 1");
  for (int e : entries_)
    if (e != 1 && e != -1) throw DomainError("sign pattern entries must be +1 or -1");
}

SignPattern SignPattern::parse(const std::string& text) {
  std::vector<int> entries;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    for (;;) {
      const auto end = text.find(',', start);
      const std::string piece = text.substr(start, end == std::string::npos ? end : end - start);
      if (piece == "1" || piece == "+1" || piece == "+") entries.push_back(1);
      else if (piece == "-1" || piece == "-") entries.push_back(-1);
      else throw std::invalid_argument("bad sign pattern entry '" + piece + "'");
      if (end == std::string::npos) break;
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c == '+') entries.push_back(1);
      else if (c == '-') entries.push_back(-1);
      else throw std::invalid_argument("bad sign pattern '" + text + "'");
    }
  }
  return SignPattern(std::move(entries));
}

SignPattern SignPattern::from_bits(unsigned s, unsigned bits) {
  std::vector<int> entries(s);
  for (unsigned i = 0; i < s; ++i) entries[i] = (bits >> i & 1) ? 1 : -1;
  return SignPattern(std::move(entries));
}

unsigned SignPattern::bits() const {
  unsigned out = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] == 1) out |= 1u << i;
  return out;
}

std::string SignPattern::to_string() const {
  std::string out;
  for (int e : entries_) out += e == 1 ? '+' : '-';
  return out;
}

SignPattern SignPattern::negated() const {
  std::vector<int> out(entries_);
  for (int& e : out) e = -e;
  return SignPattern(std::move(out));
}

Rational sigma_squared(const SignPattern& eps) {
  const unsigned s = static_cast<unsigned>(eps.size());
  if (s > 24) throw BudgetError("sigma_squared: pattern longer than 24");
  const unsigned full = (1u << s) - 1;
  auto sign_product = [&](unsigned mask) {
    int prod = 1;
    for (unsigned i = 0; i < s; ++i)
      if (mask >> i & 1) prod *= eps[i];
    return prod;
  };
  long long total = 0;
  for (unsigned t1 = 1; t1 <= full; ++t1) {
    const int p1 = sign_product(t1);
    for (int c = -static_cast<int>(s) + 1; c < static_cast<int>(s); ++c) {
      unsigned t2;
      if (c >= 0) {
        t2 = t1 << c;
        if (t2 > full) continue;
      } else {
        if (t1 & ((1u << -c) - 1)) continue;
        t2 = t1 >> -c;
      }
      total += p1 * sign_product(t2);
    }
  }
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 4, s);
  return make_rational(BigInt(static_cast<long>(total)), denom);
}

// ---- even multisets ----

namespace {

bool is_even_configuration(const std::vector<unsigned>& subsets, unsigned s,
                           const std::vector<std::int64_t>& positions) {
  std::map<std::int64_t, unsigned> mult;
  for (std::size_t j = 0; j < subsets.size(); ++j)
    for (unsigned i = 0; i < s; ++i)
      if (subsets[j] >> i & 1) ++mult[positions[j] + i + 1];
  return std::all_of(mult.begin(), mult.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

void validate_subsets(const std::vector<unsigned>& subsets, unsigned s) {
  if (subsets.empty()) throw DomainError("multiset_even_tuple_count: need at least one subset");
  if (s == 0 || s > 31) throw DomainError("multiset_even_tuple_count: s out of range");
  for (unsigned m : subsets)
    if (m == 0 || (m >> s) != 0) throw DomainError("subsets must be nonempty subsets of [s]");
}

}  // namespace

BigInt multiset_even_tuple_count_exhaustive(const std::vector<unsigned>& subsets, unsigned s,
                                            std::uint64_t X) {
  validate_subsets(subsets, s);
  const std::size_t k = subsets.size();
  std::vector<std::int64_t> n(k, 1);
  BigInt count = 0;
  if (X == 0) return count;
  for (;;) {
    if (is_even_configuration(subsets, s, n)) ++count;
    std::size_t j = 0;
    while (j < k && ++n[j] > static_cast<std::int64_t>(X)) n[j++] = 1;
    if (j == k) break;
  }
  return count;
}

BigInt multiset_even_tuple_count_clustered(const std::vector<unsigned>& subsets, unsigned s,
                                           std::uint64_t X) {
  validate_subsets(subsets, s);
  const unsigned k = static_cast<unsigned>(subsets.size());
  if (k > 12) throw BudgetError("multiset_even_tuple_count: too many subsets for clustering");

  // For each block (bitmask over [k]) the number of connected even
  // configurations by span. Offsets are relative to the block minimum; the
  // windows [n+1, n+s] of a connected block chain with gaps <= s-1.
  std::map<unsigned, std::map<std::uint64_t, BigInt>> block_spans;
  auto spans_for = [&](unsigned block) -> const std::map<std::uint64_t, BigInt>& {
    auto it = block_spans.find(block);
    if (it != block_spans.end()) return it->second;
    std::vector<unsigned> members;
    for (unsigned j = 0; j < k; ++j)
      if (block >> j & 1) members.push_back(j);
    std::vector<unsigned> local;
    for (unsigned j : members) local.push_back(subsets[j]);
    const std::size_t b = members.size();
    const std::int64_t max_offset = static_cast<std::int64_t>((b - 1) * (s - 1));
    std::map<std::uint64_t, BigInt> spans;
    if (b >= 2) {
      std::vector<std::int64_t> off(b, 0);
      for (;;) {
        const auto [mn, mx] = std::minmax_element(off.begin(), off.end());
        if (*mn == 0) {
          std::vector<std::int64_t> sorted(off);
          std::sort(sorted.begin(), sorted.end());
          bool connected = true;
          for (std::size_t i = 1; i < b; ++i)
            if (sorted[i] - sorted[i - 1] > static_cast<std::int64_t>(s) - 1) connected = false;
          if (connected && is_even_configuration(local, s, off)) spans[static_cast<std::uint64_t>(*mx)] += 1;
        }
        std::size_t i = 0;
        while (i < b && ++off[i] > max_offset) off[i++] = 0;
        if (i == b) break;
      }
    }
    return block_spans.emplace(block, std::move(spans)).first->second;
  };

  BigInt total = 0;
  // Enumerate set partitions of [k]; blocks always contain their lowest free index.
  std::vector<unsigned> blocks;
  std::function<void(unsigned)> partition = [&](unsigned remaining) {
    if (remaining == 0) {
      // Convolve span distributions of the blocks.
      std::map<std::uint64_t, BigInt> combined{{0, 1}};
      for (unsigned blk : blocks) {
        const auto& spans = spans_for(blk);
        if (spans.empty()) return;
        std::map<std::uint64_t, BigInt> next;
        for (const auto& [a, ca] : combined)
          for (const auto& [bspan, cb] : spans) next[a + bspan] += ca * cb;
        combined = std::move(next);
      }
      const std::uint64_t c = blocks.size();
      BigInt orderings;
      mpz_fac_ui(orderings.get_mpz_t(), c);
      for (const auto& [span, ways] : combined) {
        // slack = X - 1 - span - (c-1) s; placements = binom(slack + c, c)
        const long double need = static_cast<long double>(span) + static_cast<long double>((c - 1) * s) + 1;
        if (need > static_cast<long double>(X)) continue;
        const std::uint64_t slack = X - 1 - span - (c - 1) * s;
        BigInt placements;
        mpz_bin_uiui(placements.get_mpz_t(), slack + c, c);
        total += orderings * placements * ways;
      }
      return;
    }
    const unsigned lowest = remaining & (~remaining + 1);
    const unsigned rest = remaining & ~lowest;
    // every subset of `rest` joined with `lowest`
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
      blocks.push_back(lowest | sub);
      partition(rest & ~sub);
      blocks.pop_back();
      if (sub == 0) break;
    }
  };
  partition((1u << k) - 1);
  return total;
}

BigInt multiset_even_tuple_count(const std::vector<unsigned>& subsets, unsigned s, std::uint64_t X,
                                 std::uint64_t exhaustive_cap) {
  validate_subsets(subsets, s);
  long double work = 1;
  for (std::size_t j = 0; j < subsets.size(); ++j) work *= static_cast<long double>(X);
  if (work <= static_cast<long double>(exhaustive_cap))
    return multiset_even_tuple_count_exhaustive(subsets, s, X);
  return multiset_even_tuple_count_clustered(subsets, s, X);
}

}  // namespace polynt
