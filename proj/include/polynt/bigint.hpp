#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace polynt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses a decimal integer, optionally in scientific notation ("1e9",
/// "2.5e3", "-7"). The value must be integral; it is expanded exactly.
/// Throws std::invalid_argument on malformed or non-integral input.
BigInt parse_big_integer(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Always "num/den" with a positive denominator, e.g. "0/1", "3/2".
std::string to_string(const Rational& v);

/// num / den in lowest terms; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

/// Magnitude of `v` if it fits in 64 bits.
std::optional<std::uint64_t> abs_u64(const BigInt& v);

BigInt from_u64(std::uint64_t v);
BigInt from_i64(std::int64_t v);
std::uint64_t to_u64(const BigInt& v);  // precondition: fits_u64(v)

/// Canonical residue of v modulo m in [0, m).
std::uint64_t mod_u64(const BigInt& v, std::uint64_t m);

}  // namespace polynt
