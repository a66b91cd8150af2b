#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "propmod/error.hpp"
#include "propmod/interval.hpp"
#include "propmod/intervals.hpp"
#include "propmod/rational.hpp"

namespace propmod {

using LatticePoint = std::vector<std::int64_t>;

/// Ordered intervals [p_1,q_1], ..., [p_t,q_t]; an upper end of +inf is allowed
/// (its 1/q term is then zero).
struct IntervalSystem {
  std::vector<RationalInterval> intervals;
  std::vector<bool> halfline;  // empty means "none"

  IntervalSystem() = default;
  explicit IntervalSystem(std::vector<RationalInterval> ivs, std::vector<bool> hl = {})
      : intervals(std::move(ivs)), halfline(std::move(hl)) {
    if (intervals.empty()) throw InputError("interval system needs at least one interval");
    // Maximal open intervals may start at 1, so only positivity is required.
    for (const auto& iv : intervals)
      if (!(iv.lo > 0 && (!iv.hi || *iv.hi > iv.lo))) throw InputError("bad interval in system: " + iv.str());
    if (!halfline.empty() && halfline.size() != intervals.size())
      throw InputError("half-line flags do not match interval count");
  }

  std::size_t size() const { return intervals.size(); }
  const Rational& p(std::size_t j) const { return intervals[j].lo; }
  bool is_halfline(std::size_t j) const {
    return !intervals[j].hi || (!halfline.empty() && halfline[j]);
  }
};

namespace detail {

inline void check_dim(const IntervalSystem& L, const LatticePoint& x) {
  if (x.size() != L.size())
    throw InputError("point dimension " + std::to_string(x.size()) + " does not match system size " +
                     std::to_string(L.size()));
}

}  // namespace detail

// sum x_j / p_j
inline Rational weight_p(const IntervalSystem& L, const LatticePoint& x) {
  detail::check_dim(L, x);
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j]) s += Rational(x[j]) / L.intervals[j].lo;
  return s;
}

// sum x_j / q_j, with x_j / inf = 0
inline Rational weight_q(const IntervalSystem& L, const LatticePoint& x) {
  detail::check_dim(L, x);
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] && L.intervals[j].hi) s += Rational(x[j]) / *L.intervals[j].hi;
  return s;
}

inline int h1_sign(const IntervalSystem& L, std::int64_t i, const LatticePoint& x) {
  return sign(Rational(i) - weight_p(L, x));
}

inline int h2_sign(const IntervalSystem& L, std::int64_t i, const LatticePoint& x) {
  return sign(Rational(i) - weight_q(L, x));
}

inline std::int64_t phi_system(const IntervalSystem& L) {
  std::int64_t best = 0;
  for (const auto& iv : L.intervals) best = std::max(best, phi(iv));
  return best;
}

/// Largest integer strictly below sum x_j/p_j, or 0.
inline std::int64_t kappa(const IntervalSystem& L, const LatticePoint& x) {
  Integer k = ceil(weight_p(L, x)) - 1;
  return k < 0 ? 0 : to_i64(k);
}

/// 1 iff x lies in some band i*P_L, i >= 0. Band 0 is the origin alone,
/// which matters once an upper end is +inf.
inline int theta(const IntervalSystem& L, const LatticePoint& x) {
  detail::check_dim(L, x);
  if (std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; })) return 1;
  Integer lo = ceil(weight_q(L, x));
  if (lo < 1) lo = 1;
  return floor(weight_p(L, x)) >= lo ? 1 : 0;
}

enum class RegionKind { Hole, Band, Cone };

struct Region {
  RegionKind kind;
  std::int64_t i = 0;
  static Region hole(std::int64_t i) { return {RegionKind::Hole, i}; }
  static Region band(std::int64_t i) { return {RegionKind::Band, i}; }
  static Region cone() { return {RegionKind::Cone, 0}; }
};

inline bool in_region(const IntervalSystem& L, const Region& r, const LatticePoint& x) {
  switch (r.kind) {
    case RegionKind::Hole: {
      if (weight_p(L, x) >= r.i) return false;
      return r.i == 1 ? std::any_of(x.begin(), x.end(), [](auto c) { return c != 0; })
                      : weight_q(L, x) > r.i - 1;
    }
    case RegionKind::Band:
      return weight_q(L, x) <= r.i && r.i <= weight_p(L, x);
    case RegionKind::Cone:
      return weight_q(L, x) <= phi_system(L);
  }
  return false;
}

namespace detail {

// Calls visit(x) for every x in prod [0, bound_j].
template <typename Visit>
void for_each_in_box(const std::vector<std::int64_t>& bound, Visit&& visit) {
  LatticePoint x(bound.size(), 0);
  if (std::any_of(bound.begin(), bound.end(), [](auto b) { return b < 0; })) return;
  while (true) {
    visit(static_cast<const LatticePoint&>(x));
    std::size_t j = 0;
    while (j < x.size() && x[j] == bound[j]) x[j++] = 0;
    if (j == x.size()) return;
    ++x[j];
  }
}

}  // namespace detail

/// Lattice points of the hole slice H_i, the band slice S_i or the cone T.
/// H_1 excludes the origin; T includes it.
inline std::vector<LatticePoint> region_points(const IntervalSystem& L, const Region& r) {
  const std::int64_t ph = phi_system(L);
  if (r.kind != RegionKind::Cone && (r.i < 1 || r.i > ph))
    throw InputError("band index " + std::to_string(r.i) + " outside [1, " + std::to_string(ph) + "]");
  std::vector<std::int64_t> bound;
  for (const auto& iv : L.intervals) {
    if (r.kind == RegionKind::Hole) {
      bound.push_back(to_i64(floor(r.i * iv.lo)));
    } else {
      if (!iv.hi) throw InputError("band or cone region of a half-line system is unbounded");
      bound.push_back(to_i64(floor((r.kind == RegionKind::Cone ? ph : r.i) * *iv.hi)));
    }
  }
  std::vector<LatticePoint> out;
  detail::for_each_in_box(bound, [&](const LatticePoint& x) {
    if (in_region(L, r, x)) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Interval system on the first t coordinates plus, for each later
/// coordinate, the slopes w_j and z_j of the two tilted facets.
struct ExtendedSystem {
  IntervalSystem base;
  std::vector<Rational> w, z;

  std::size_t dimension() const { return base.size() + w.size(); }
};

namespace detail {

inline void check_dim(const ExtendedSystem& e, const LatticePoint& x) {
  if (e.w.size() != e.z.size()) throw InputError("slope vectors differ in length");
  if (x.size() != e.dimension()) throw InputError("point dimension does not match extended system");
}

}  // namespace detail

// i - sum_{j<=t} x_j/q_j + sum_{j>t} w_j x_j
inline Rational tau1(const ExtendedSystem& e, std::int64_t i, const LatticePoint& x) {
  detail::check_dim(e, x);
  const std::size_t t = e.base.size();
  Rational s = Rational(i) - weight_q(e.base, LatticePoint(x.begin(), x.begin() + t));
  for (std::size_t j = t; j < x.size(); ++j) s += e.w[j - t] * x[j];
  return s;
}

// i - sum_{j<=t} x_j/p_j - sum_{j>t} z_j x_j
inline Rational tau2(const ExtendedSystem& e, std::int64_t i, const LatticePoint& x) {
  detail::check_dim(e, x);
  const std::size_t t = e.base.size();
  Rational s = Rational(i) - weight_p(e.base, LatticePoint(x.begin(), x.begin() + t));
  for (std::size_t j = t; j < x.size(); ++j) s -= e.z[j - t] * x[j];
  return s;
}

inline int tau1_sign(const ExtendedSystem& e, std::int64_t i, const LatticePoint& x) {
  return sign(tau1(e, i, x));
}
inline int tau2_sign(const ExtendedSystem& e, std::int64_t i, const LatticePoint& x) {
  return sign(tau2(e, i, x));
}

}  // namespace propmod
