#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "propmod/error.hpp"

namespace propmod {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational frac(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InputError("zero denominator");
  return Rational(Integer(n), Integer(d));
}

inline Integer floor(const Rational& r) {
  Integer n = num(r), d = den(r);  // d > 0
  Integer q = n / d;               // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

inline Integer ceil(const Rational& r) {
  Integer n = num(r), d = den(r);
  Integer q = n / d;
  if (n > 0 && q * d != n) q += 1;
  return q;
}

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer g = boost::multiprecision::gcd(a, b);
  Integer l = a / g * b;
  return l < 0 ? Integer(-l) : l;
}

inline std::int64_t to_i64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("integer does not fit in 64 bits", 0);
  return z.convert_to<std::int64_t>();
}

// "num/den" in lowest terms, or "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw InputError("malformed rational '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw InputError("malformed rational '" + std::string(s) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer n = parse_int(trim(text.substr(0, slash)));
  Integer d = parse_int(trim(text.substr(slash + 1)));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

}  // namespace propmod
