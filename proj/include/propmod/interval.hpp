#pragma once

#include <optional>
#include <string>

#include "propmod/rational.hpp"

namespace propmod {

// Interval of the positive half-line with rational endpoints. An absent
// upper endpoint means +inf, which is always open.
struct RationalInterval {
  Rational lo;
  std::optional<Rational> hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static RationalInterval closed(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi), true, true};
  }
  static RationalInterval open(Rational lo, std::optional<Rational> hi) {
    return {std::move(lo), std::move(hi), false, false};
  }
  static RationalInterval halfline(Rational lo, bool lo_closed = true) {
    return {std::move(lo), std::nullopt, lo_closed, false};
  }

  bool bounded() const { return hi.has_value(); }
  bool is_closed() const { return lo_closed && hi_closed && hi.has_value(); }

  bool contains(const Rational& x) const {
    if (lo_closed ? x < lo : x <= lo) return false;
    if (!hi) return true;
    return hi_closed ? x <= *hi : x < *hi;
  }

  // lo > 1, lo < hi, +inf only as an open end.
  void validate() const {
    if (lo <= 1) throw InputError("interval lower endpoint must exceed 1: " + str());
    if (hi && *hi <= lo) throw InputError("empty interval: " + str());
    if (!hi && hi_closed) throw InputError("+inf cannot be a closed endpoint");
  }

  std::string str() const {
    std::string s = lo_closed ? "[" : "]";
    s += to_string(lo) + ", ";
    s += hi ? to_string(*hi) : std::string("+inf");
    s += hi_closed ? "]" : "[";
    return s;
  }

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

}  // namespace propmod
