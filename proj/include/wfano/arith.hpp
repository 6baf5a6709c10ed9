#pragma once

// Exact arithmetic helpers shared by every module. All intersection numbers
// are carried as GMP rationals; nothing in the library touches floating point.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wfano {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when parameters fall outside the geometric domain a routine models.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Integer power(long base, unsigned long exponent) {
  return power(Integer(base), exponent);
}

inline Rational power(const Rational& base, unsigned long exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// num/den in lowest terms. Prefer this to the two-argument mpq_class
// constructor, which does not canonicalize.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// (-1)^k for any integer k.
constexpr int sign_power(long k) noexcept { return (k % 2 == 0) ? 1 : -1; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Accepts "p", "-p" or "p/q" with q != 0.
inline Rational parse_rational(std::string_view text) {
  const auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{}
                                                   : text.substr(slash + 1);
  if (!valid_int(num, true) ||
      (slash != std::string_view::npos && !valid_int(den, false)))
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Rational out;
  out.get_num() = Integer(n);
  out.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  out.canonicalize();
  return out;
}

}  // namespace wfano
