#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "propmod/interval.hpp"
#include "propmod/numsem.hpp"
#include "propmod/rational.hpp"

namespace propmod {

// A minimal closed interval defining S together with the unique maximal open
// interval around it that defines the same semigroup.
struct IntervalPair {
  RationalInterval minimal;
  RationalInterval maximal;
  // Half-line intervals keep a finite minimal upper end; the maximal one is +inf.
  bool halfline() const { return !maximal.hi.has_value(); }
  friend bool operator==(const IntervalPair&, const IntervalPair&) = default;
};

/// First dilation index from which consecutive dilations overlap:
/// ceil(lo / (hi - lo)), and 1 for a half-line.
inline std::int64_t phi(const RationalInterval& iv) {
  if (!iv.hi) return 1;
  return to_i64(ceil(iv.lo / (*iv.hi - iv.lo)));
}

/// True iff enlarging the upper end never changes the generated semigroup.
inline bool is_halfline_interval(const RationalInterval& iv) {
  RationalInterval ray = RationalInterval::halfline(iv.lo, iv.lo_closed);
  return from_interval(iv) == from_interval(ray);
}

namespace detail {

struct FractionEntry {
  std::int64_t a = 0;  // numerator: a generator or a special gap
  std::int64_t k = 0;  // 1 <= k <= a - 1
  bool generator = false;
};

inline bool frac_less(const FractionEntry& x, const FractionEntry& y) {
  return static_cast<__int128>(x.a) * y.k < static_cast<__int128>(y.a) * x.k;
}
inline bool frac_equal(const FractionEntry& x, const FractionEntry& y) {
  return static_cast<__int128>(x.a) * y.k == static_cast<__int128>(y.a) * x.k;
}

// Walks the fraction list {a/k : a in gens u (special \ {1}), k in [a-1]}
// sorted by value then numerator, and reports every block [h, e] of consecutive
// entries whose numerators are exactly the generators, which does not split a
// run of equal fractions. Only the shortest block per start is reported, which
// is all inclusion-minimality needs. `emit` returns false to stop early.
inline void scan_defining_runs(
    std::span<const std::int64_t> gens, std::span<const std::int64_t> special,
    const std::function<bool(const FractionEntry&, const FractionEntry&)>& emit) {
  std::vector<FractionEntry> entries;
  auto add = [&](std::int64_t a, bool gen) {
    for (std::int64_t k = 1; k < a; ++k) entries.push_back({a, k, gen});
  };
  for (std::int64_t g : gens) add(g, true);
  for (std::int64_t x : special)
    if (x != 1) add(x, false);
  std::sort(entries.begin(), entries.end(), [](const FractionEntry& x, const FractionEntry& y) {
    if (frac_less(x, y)) return true;
    if (frac_less(y, x)) return false;
    return x.a < y.a;
  });

  const std::size_t count = entries.size();
  std::vector<std::int64_t> sorted_gens(gens.begin(), gens.end());
  std::sort(sorted_gens.begin(), sorted_gens.end());
  std::vector<char> seen(sorted_gens.size());
  auto gen_index = [&](std::int64_t a) {
    return static_cast<std::size_t>(std::lower_bound(sorted_gens.begin(), sorted_gens.end(), a) -
                                    sorted_gens.begin());
  };

  for (std::size_t h = 0; h < count; ++h) {
    if (!entries[h].generator) continue;
    if (h > 0 && frac_equal(entries[h - 1], entries[h])) continue;
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t covered = 0;
    for (std::size_t e = h; e < count; ++e) {
      if (!entries[e].generator) break;
      std::size_t gi = gen_index(entries[e].a);
      if (!seen[gi]) {
        seen[gi] = 1;
        ++covered;
      }
      bool closes = e + 1 == count || !frac_equal(entries[e], entries[e + 1]);
      if (covered == sorted_gens.size() && closes) {
        if (!emit(entries[h], entries[e])) return;
        break;
      }
    }
  }
}

}  // namespace detail

/// Algorithm-1 membership test: S admits a defining closed interval.
/// N itself counts as proportionally modular.
inline bool is_proportionally_modular(const NumericalSemigroup& s) {
  if (s.is_whole()) return true;
  std::vector<std::int64_t> special = special_gaps(s);
  bool found = false;
  detail::scan_defining_runs(s.generators(), special, [&](const auto&, const auto&) {
    found = true;
    return false;
  });
  return found;
}

/// ]p^, q^[ : the largest open interval around the closed interval `iv` that
/// still generates `s`. q^ is +inf exactly when `iv` is a half-line interval.
inline RationalInterval maximal_open_interval(const RationalInterval& iv, const NumericalSemigroup& s) {
  if (!iv.is_closed()) throw InputError("maximal_open_interval expects a closed bounded interval");
  if (s.is_whole()) throw InputError("maximal_open_interval: semigroup is N");
  if (from_interval(iv) != s)
    throw InputError("interval " + iv.str() + " does not define " + s.str());
  const Rational& p = iv.lo;
  const Rational& q = *iv.hi;

  // Gaps sitting in the slot ((i-1)q, ip) bound p from below, gaps in
  // (iq, (i+1)p) bound q from above. 1 lies in the first slot since p > 1.
  std::optional<Rational> p_hat, q_hat;
  for (std::int64_t gap : s.gaps()) {
    Rational x(gap);
    for (std::int64_t i = 1; (i - 1) * q < x; ++i) {
      if (x < i * p) {
        Rational cand = x / i;
        if (!p_hat || cand > *p_hat) p_hat = cand;
      }
    }
    for (std::int64_t i = 1; i * q < x; ++i) {
      if (x < (i + 1) * p) {
        Rational cand = x / i;
        if (!q_hat || cand < *q_hat) q_hat = cand;
      }
    }
  }
  return RationalInterval::open(*p_hat, q_hat);
}

/// L~_S paired with L^_S. Empty iff S is not proportionally modular.
inline std::vector<IntervalPair> minimal_intervals(const NumericalSemigroup& s) {
  if (s.is_whole()) throw InputError("minimal_intervals: S must be a proper semigroup (got N)");
  std::vector<std::int64_t> special = special_gaps(s);
  std::vector<RationalInterval> found;
  detail::scan_defining_runs(s.generators(), special,
                             [&](const detail::FractionEntry& lo, const detail::FractionEntry& hi) {
                               found.push_back(RationalInterval::closed(frac(lo.a, lo.k), frac(hi.a, hi.k)));
                               return true;
                             });
  std::vector<IntervalPair> out;
  for (const auto& cand : found) {
    bool has_smaller = std::any_of(found.begin(), found.end(), [&](const RationalInterval& other) {
      return other != cand && other.lo >= cand.lo && *other.hi <= *cand.hi;
    });
    if (has_smaller) continue;
    if (std::any_of(out.begin(), out.end(), [&](const IntervalPair& pr) { return pr.minimal == cand; }))
      continue;
    out.push_back({cand, maximal_open_interval(cand, s)});
  }
  std::sort(out.begin(), out.end(),
            [](const IntervalPair& x, const IntervalPair& y) { return x.minimal.lo < y.minimal.lo; });
  return out;
}

/// The semigroup of a x mod b <= c x is S([b/a, b/(a-c)]) when 0 < c < a < b.
inline RationalInterval inequality_to_interval(const Integer& a, const Integer& b, const Integer& c) {
  if (!(0 < c && c < a && a < b))
    throw InputError("inequality_to_interval needs 0 < c < a < b");
  return RationalInterval::closed(Rational(b, a), Rational(b, a - c));
}

struct IntervalInequality {
  Integer a, b, c;  // a x mod b <= c x
  friend bool operator==(const IntervalInequality&, const IntervalInequality&) = default;
};

/// [b1/a1, b2/a2] in lowest terms -> a1 b2 x mod b1 b2 <= (a1 b2 - a2 b1) x.
inline IntervalInequality interval_to_inequality(const RationalInterval& iv) {
  if (!iv.hi) throw InputError("half-line: choose finite representative first");
  if (!iv.is_closed()) throw InputError("interval_to_inequality expects a closed interval");
  iv.validate();
  Integer b1 = num(iv.lo), a1 = den(iv.lo);
  Integer b2 = num(*iv.hi), a2 = den(*iv.hi);
  return {a1 * b2, b1 * b2, a1 * b2 - a2 * b1};
}

}  // namespace propmod
