#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyzero {

// Exact arithmetic carriers. mpq_class keeps rationals reduced with a
// positive denominator, so exact equality is structural equality.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (sgn(base) == 0 && e < 0) throw std::domain_error("rat_pow: 0 to negative power");
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  const Int num = int_pow(base.get_num(), a);
  const Int den = int_pow(base.get_den(), a);
  return e < 0 ? make_rat(den, num) : make_rat(num, den);
}

inline Rat rat_abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }

/// Parses "num/den" or "num" (base-10, optional sign). Result is reduced.
inline Rat rat_from_frac_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_frac_string(const Rat& q) { return q.get_str(); }

/// Parses plain or scientific decimal ("0.5", "-3.25e+2", "1e-12") into an
/// exact rational. No float contamination: digits are scaled by powers of 10.
inline Rat rat_from_decimal_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty decimal literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal literal: " + s);
      seen_dot = true;
    } else {
      digits.push_back(s[i]);
      if (seen_dot) ++frac_len;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal literal: " + s);
  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("bad decimal literal: " + s);
    exp10 = std::stol(s.substr(i + 1));
  }
  Int mantissa(digits, 10);
  if (neg) mantissa = -mantissa;
  const long net = exp10 - frac_len;
  if (net >= 0) return Rat(mantissa * int_pow(10, static_cast<unsigned long>(net)));
  return make_rat(mantissa, int_pow(10, static_cast<unsigned long>(-net)));
}

/// Exact decimal rendering with `frac_digits` digits after the point,
/// rounded half away from zero. Deterministic across platforms.
inline std::string to_decimal_string(const Rat& q, int frac_digits = 18) {
  if (frac_digits < 0) throw std::invalid_argument("frac_digits < 0");
  Int num = q.get_num();
  const Int& den = q.get_den();
  const bool neg = sgn(num) < 0;
  if (neg) num = -num;
  const Int scale = int_pow(10, static_cast<unsigned long>(frac_digits));
  const Int rounded = (2 * num * scale + den) / (2 * den);
  const Int whole = rounded / scale;
  std::string frac = Int(rounded % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(frac_digits) - frac.size(), '0');
  std::string out = neg && (whole != 0 || rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (frac_digits > 0) {
    out += '.';
    out += frac;
  }
  return out;
}

}  // namespace polyzero
