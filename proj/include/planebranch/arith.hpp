#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "planebranch/errors.hpp"

namespace planebranch {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& p, const Integer& q) { return Rational(p, q); }

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

/// Floor of a rational, exact.
inline Integer floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

/// Non-negative representative of `a mod m` for m > 0.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Fractional part r - floor(r), in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(floor(r)); }

/// Inverse of a modulo m (gcd(a, m) = 1, m >= 1).
inline Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  Integer old_r = mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error(ErrorKind::PreconditionViolated, "mod_inverse: arguments not coprime");
  return mod(old_s, m);
}

inline Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Integer factorial(unsigned k) {
  Integer r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Narrowing conversion that refuses values outside the target range.
template <typename T>
T narrow(const Integer& v, std::string_view what = "value") {
  if (v < std::numeric_limits<T>::min() || v > std::numeric_limits<T>::max())
    throw Error(ErrorKind::Overflow, std::string(what) + " does not fit in a machine integer");
  return static_cast<T>(v);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Integer& v) { return v.convert_to<double>(); }

/// Canonical "p/q" form in lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::Parse, "empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::Parse, "malformed integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

/// Accepts "p", "p/q" and finite decimals such as "-0.55".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer q = parse_integer(std::string_view(s).substr(slash + 1));
    if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    return Rational(parse_integer(std::string_view(s).substr(0, slash)), q);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t places = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw Error(ErrorKind::Parse, "malformed decimal '" + s + "'");
    return Rational(parse_integer(digits), pow(Integer(10), static_cast<unsigned>(places)));
  }
  return Rational(parse_integer(s));
}

}  // namespace planebranch
