#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "propmod/error.hpp"
#include "propmod/interval.hpp"
#include "propmod/rational.hpp"

namespace propmod {

namespace detail {

// Minimal generators of the cofinite monoid described by `member`, searching
// 1..bound. Elements are visited in increasing order, so x is irreducible iff
// no smaller generator g leaves x - g in the monoid.
template <typename Member>
std::vector<std::int64_t> irreducibles(Member&& member, std::int64_t bound) {
  std::vector<std::int64_t> gens;
  for (std::int64_t x = 1; x <= bound; ++x) {
    if (!member(x)) continue;
    bool reducible = std::any_of(gens.begin(), gens.end(), [&](std::int64_t g) {
      return x - g > 0 && member(x - g);
    });
    if (!reducible) gens.push_back(x);
  }
  return gens;
}

}  // namespace detail

/// Cofinite submonoid of the naturals, kept as its minimal generating set and
/// its (finite, sorted) gap set.
class NumericalSemigroup {
 public:
  NumericalSemigroup() : gens_{1} {}

  static NumericalSemigroup from_generators(std::span<const std::int64_t> gens);
  static NumericalSemigroup from_gaps(std::vector<std::int64_t> gaps);

  const std::vector<std::int64_t>& generators() const { return gens_; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  std::int64_t frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  std::int64_t conductor() const { return frobenius() + 1; }
  std::int64_t multiplicity() const { return gens_.front(); }
  std::size_t genus() const { return gaps_.size(); }
  bool is_whole() const { return gaps_.empty(); }

  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    return !std::binary_search(gaps_.begin(), gaps_.end(), x);
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + std::to_string(gens_[i]);
    return s + ">";
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

 private:
  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> gaps_;
};

/// Unique minimal generating set of N \ gaps. Throws when the complement is
/// not closed under addition.
inline std::vector<std::int64_t> minimal_generators(std::span<const std::int64_t> gaps) {
  std::vector<std::int64_t> g(gaps.begin(), gaps.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (!g.empty() && g.front() <= 0) throw InputError("gaps must be positive integers");
  auto member = [&](std::int64_t x) { return x >= 0 && !std::binary_search(g.begin(), g.end(), x); };
  for (std::int64_t h : g)
    for (std::int64_t a = 1; a < h; ++a)
      if (member(a) && member(h - a))
        throw InputError("not a semigroup: " + std::to_string(a) + " + " +
                         std::to_string(h - a) + " = " + std::to_string(h) + " is a gap");
  std::int64_t frob = g.empty() ? 0 : g.back();
  return detail::irreducibles(member, 2 * (frob + 1));
}

inline NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<std::int64_t> gaps) {
  NumericalSemigroup s;
  s.gens_ = minimal_generators(gaps);
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  s.gaps_ = std::move(gaps);
  return s;
}

inline NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> gens) {
  if (gens.empty()) throw InputError("empty generator list");
  std::int64_t g = 0, m = 0;
  for (std::int64_t x : gens) {
    if (x <= 0) throw InputError("generators must be positive, got " + std::to_string(x));
    g = std::gcd(g, x);
    m = m == 0 ? x : std::min(m, x);
  }
  if (g != 1) throw InputError("not cofinite: generators have gcd " + std::to_string(g));

  // Sieve until m consecutive members appear; everything after is a member.
  std::vector<char> mem{1};
  std::int64_t run = 0;
  for (std::int64_t x = 1; run < m; ++x) {
    bool in = std::any_of(gens.begin(), gens.end(),
                          [&](std::int64_t a) { return a <= x && mem[x - a]; });
    mem.push_back(in);
    run = in ? run + 1 : 0;
  }
  NumericalSemigroup s;
  for (std::int64_t x = 1; x < static_cast<std::int64_t>(mem.size()); ++x)
    if (!mem[x]) s.gaps_.push_back(x);
  auto member = [&](std::int64_t x) { return s.contains(x); };
  s.gens_ = detail::irreducibles(member, s.frobenius() + m + 1);
  return s;
}

/// Gaps x such that S u {x} is still a semigroup.
inline std::vector<std::int64_t> special_gaps(const NumericalSemigroup& s) {
  if (s.is_whole()) throw InputError("special gaps of N requested (empty gap set)");
  std::vector<std::int64_t> out;
  const std::int64_t f = s.frobenius();
  for (std::int64_t x : s.gaps()) {
    if (!s.contains(2 * x)) continue;
    bool ok = true;
    for (std::int64_t e = 1; e <= f && ok; ++e)
      if (s.contains(e) && !s.contains(x + e)) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

/// Semigroup of the naturals lying in some dilation i*I, i >= 1, plus 0.
inline NumericalSemigroup from_interval(const RationalInterval& iv) {
  iv.validate();
  // Integers i >= 1 with i*lo <= x and x <= i*hi (strict on open ends).
  auto member = [&](std::int64_t x) {
    if (x == 0) return true;
    Rational xr(x);
    Rational by_lo = xr / iv.lo;
    Integer i_max = iv.lo_closed ? floor(by_lo) : ceil(by_lo) - 1;
    Integer i_min = 1;
    if (iv.hi) {
      Rational by_hi = xr / *iv.hi;
      i_min = iv.hi_closed ? ceil(by_hi) : floor(by_hi) + 1;
      if (i_min < 1) i_min = 1;
    }
    return i_min <= i_max;
  };
  std::vector<std::int64_t> gaps;
  std::int64_t run = 0, mult = 0;
  for (std::int64_t x = 1; mult == 0 || run < mult; ++x) {
    if (member(x)) {
      if (mult == 0) mult = x;
      ++run;
    } else {
      gaps.push_back(x);
      run = 0;
    }
  }
  return NumericalSemigroup::from_gaps(std::move(gaps));
}

}  // namespace propmod
