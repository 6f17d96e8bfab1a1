#include "polynt/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace polynt {

BigInt parse_big_integer(std::string_view text) {
  auto fail = [&]() -> BigInt {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(pos, end - pos);
  if (text.empty()) return fail();

  bool negative = false;
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string int_digits;
  std::string frac_digits;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) int_digits += text[i++];
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac_digits += text[i++];
  }
  if (int_digits.empty() && frac_digits.empty()) return fail();

  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) return fail();
    std::string exp_digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exp_digits += text[i++];
    if (exp_digits.empty() || exp_digits.size() > 6) return fail();
    exponent = std::stol(exp_digits);
    if (exp_negative) exponent = -exponent;
  }
  if (i != text.size()) return fail();

  // value = (int_digits . frac_digits) * 10^exponent
  std::string digits = int_digits + frac_digits;
  long shift = exponent - static_cast<long>(frac_digits.size());
  if (shift < 0) {
    // The dropped digits must all be zero for the value to be integral.
    const auto drop = static_cast<std::size_t>(-shift);
    if (drop > digits.size()) {
      for (char c : digits)
        if (c != '0') return fail();
      digits = "0";
    } else {
      for (std::size_t k = digits.size() - drop; k < digits.size(); ++k)
        if (digits[k] != '0') return fail();
      digits.resize(digits.size() - drop);
      if (digits.empty()) digits = "0";
    }
    shift = 0;
  }
  BigInt value(digits, 10);
  if (shift > 0) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    value *= scale;
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<std::uint64_t> abs_u64(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  static_assert(sizeof(unsigned long) == 8, "expects LP64");
  return mpz_getlimbn(v.get_mpz_t(), 0);
}

BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_set_ui(r.get_mpz_t(), v);
  return r;
}

BigInt from_i64(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), v);
  return r;
}

std::uint64_t to_u64(const BigInt& v) { return mpz_get_ui(v.get_mpz_t()); }

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

}  // namespace polynt
