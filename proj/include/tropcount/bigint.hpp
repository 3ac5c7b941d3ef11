#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "tropcount/error.hpp"

namespace tropcount {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int &a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Int lcm_int(const Int &a, const Int &b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

/// Floor division (rounds toward negative infinity, unlike operator/).
inline Int floor_div(const Int &a, const Int &b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_mod(const Int &a, const Int &b) { return a - floor_div(a, b) * b; }

inline std::int64_t to_i64(const Int &a) {
  if (a > Int(INT64_MAX) || a < Int(INT64_MIN))
    raise(ErrorKind::TooLarge, "integer " + a.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(a);
}

inline std::string to_string(const Int &a) { return a.str(); }

inline std::string to_string(const Rational &q) {
  const Int &num = boost::multiprecision::numerator(q);
  const Int &den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Int parse_int(const std::string &s) {
  if (s.empty()) raise(ErrorKind::Parse, "empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) raise(ErrorKind::Parse, "bad integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') raise(ErrorKind::Parse, "bad integer '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

/// Accepts "p", "p/q" and normalizes (lowest terms, positive denominator).
inline Rational parse_rational(const std::string &s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) raise(ErrorKind::Parse, "zero denominator in '" + s + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline bool is_integer(const Rational &q) { return boost::multiprecision::denominator(q) == 1; }

} // namespace tropcount
