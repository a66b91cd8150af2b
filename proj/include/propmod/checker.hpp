#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propmod/affine.hpp"
#include "propmod/bands.hpp"
#include "propmod/error.hpp"
#include "propmod/feasibility.hpp"
#include "propmod/intervals.hpp"
#include "propmod/rational.hpp"

namespace propmod {

/// Intervals [p_k, q_k] on the first t (permuted) coordinates and, for each
/// later coordinate, the direction pairs mu = (mu1, mu2), nu = (nu1, nu2).
/// permutation[k] is the original coordinate placed at position k.
struct Witness {
  int case_id = 1;
  std::size_t t = 0;
  std::vector<Rational> p, q;
  std::vector<std::pair<Rational, Rational>> mu, nu;
  std::vector<std::size_t> permutation;

  std::size_t dimension() const { return t + mu.size(); }
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// u = 1/p, v = 1/q on interval coordinates; w, z slopes on tail coordinates.
struct LinearParams {
  std::vector<Rational> u, v, w, z;
};

inline void validate_witness(const Witness& wit) {
  if (wit.t == 0) throw InputError("witness needs at least one interval coordinate");
  if (wit.p.size() != wit.t || wit.q.size() != wit.t) throw InputError("witness p/q length differs from t");
  if (wit.mu.size() != wit.nu.size()) throw InputError("witness mu/nu lengths differ");
  const std::size_t n = wit.dimension();
  if (wit.permutation.size() != n) throw InputError("witness permutation has wrong length");
  std::vector<std::size_t> sorted = wit.permutation;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < n; ++k)
    if (sorted[k] != k) throw InputError("witness permutation is not a permutation of 0..n-1");
  for (std::size_t k = 0; k < wit.t; ++k)
    if (!(wit.p[k] > 0 && wit.q[k] > wit.p[k])) throw InputError("witness needs 0 < p_k < q_k");
  auto check_dir = [](const std::pair<Rational, Rational>& d, const char* name) {
    if (!(d.first >= 0 && d.first < 1 && d.second > 0 && d.second <= 1 && d.first + d.second == 1))
      throw InputError(std::string("witness ") + name + " must satisfy m1 in [0,1), m2 in (0,1], m1 + m2 = 1");
  };
  for (const auto& d : wit.mu) check_dir(d, "mu");
  for (const auto& d : wit.nu) check_dir(d, "nu");
}

inline LinearParams linearize(const Witness& wit) {
  validate_witness(wit);
  LinearParams lp;
  for (std::size_t k = 0; k < wit.t; ++k) {
    lp.u.push_back(1 / wit.p[k]);
    lp.v.push_back(1 / wit.q[k]);
  }
  const Rational &pt = wit.p.back(), &qt = wit.q.back();
  for (std::size_t j = 0; j < wit.mu.size(); ++j) {
    lp.w.push_back(wit.mu[j].first / (qt * wit.mu[j].second));
    lp.z.push_back(wit.nu[j].first / (pt * wit.nu[j].second));
  }
  return lp;
}

inline Witness delinearize(const LinearParams& lp, int case_id, std::vector<std::size_t> perm) {
  Witness wit;
  wit.case_id = case_id;
  wit.t = lp.u.size();
  for (std::size_t k = 0; k < wit.t; ++k) {
    wit.p.push_back(1 / lp.u[k]);
    wit.q.push_back(1 / lp.v[k]);
  }
  const Rational &pt = wit.p.back(), &qt = wit.q.back();
  for (std::size_t j = 0; j < lp.w.size(); ++j) {
    Rational m2 = 1 / (1 + qt * lp.w[j]);
    Rational n2 = 1 / (1 + pt * lp.z[j]);
    wit.mu.emplace_back(1 - m2, m2);
    wit.nu.emplace_back(1 - n2, n2);
  }
  wit.permutation = std::move(perm);
  validate_witness(wit);
  return wit;
}

inline LatticePoint permute_point(const LatticePoint& x, const std::vector<std::size_t>& perm) {
  LatticePoint y(x.size());
  for (std::size_t k = 0; k < perm.size(); ++k) y[k] = x[perm[k]];
  return y;
}

inline AffineSemigroup permute(const AffineSemigroup& s, const std::vector<std::size_t>& perm) {
  std::vector<LatticePoint> gaps;
  for (const auto& h : s.gaps()) gaps.push_back(permute_point(h, perm));
  std::optional<std::vector<LatticePoint>> gens;
  if (s.generators()) {
    gens.emplace();
    for (const auto& g : *s.generators()) gens->push_back(permute_point(g, perm));
  }
  return AffineSemigroup(s.dimension(), std::move(gaps), std::move(gens));
}

/// b is the lcm of all denominators of u, v, w, z; f = b u | b z and
/// g = b (u - v) | b (z + w), returned in original coordinate order.
inline ModularInequality witness_to_inequality(const Witness& wit) {
  LinearParams lp = linearize(wit);
  Integer b = 1;
  for (const auto* vec : {&lp.u, &lp.v, &lp.w, &lp.z})
    for (const auto& r : *vec) b = lcm(b, den(r));
  const std::size_t n = wit.dimension();
  std::vector<Integer> f(n), g(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational fk, gk;
    if (k < wit.t) {
      fk = b * lp.u[k];
      gk = b * (lp.u[k] - lp.v[k]);
    } else {
      fk = b * lp.z[k - wit.t];
      gk = b * (lp.z[k - wit.t] + lp.w[k - wit.t]);
    }
    f[wit.permutation[k]] = num(fk);
    g[wit.permutation[k]] = num(gk);
  }
  return ModularInequality::make(std::move(f), b, std::move(g), false);
}

/// Points on which S and the semigroup of an inequality disagree.
struct Mismatch {
  std::vector<LatticePoint> included_gaps;     // gaps of S the inequality accepts
  std::vector<LatticePoint> excluded_members;  // members of S the inequality rejects
  bool ok() const { return included_gaps.empty() && excluded_members.empty(); }
};

inline Mismatch compare_with(const AffineSemigroup& s, const ModularInequality& m,
                             std::size_t max_points = 20'000'000) {
  if (m.dimension() != s.dimension()) throw InputError("inequality and semigroup dimensions differ");
  Mismatch mm;
  for (const auto& h : s.gaps())
    if (ineq_membership(m, h)) mm.included_gaps.push_back(h);

  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < m.dimension(); ++j)
    if (m.g[j] > 0) live.push_back(j);
  if (live.size() == m.dimension()) {
    AffineSemigroup rejected = gaps_from_inequality(m, max_points);
    for (const auto& h : rejected.gaps())
      if (s.contains(h)) mm.excluded_members.push_back(h);
    return mm;
  }
  // Coordinates with g_j <= 0 never help membership, so any rejected point
  // repeats along them forever; report the rejected points with those zeroed.
  std::vector<Integer> f2, g2;
  for (auto j : live) {
    f2.push_back(m.f[j]);
    g2.push_back(m.g[j]);
  }
  if (live.empty()) return mm;
  ModularInequality sub = ModularInequality::make(f2, m.b, g2, false);
  AffineSemigroup rejected = gaps_from_inequality(sub, max_points);
  for (const auto& h : rejected.gaps()) {
    LatticePoint x(m.dimension(), 0);
    for (std::size_t k = 0; k < live.size(); ++k) x[live[k]] = h[k];
    if (s.contains(x)) mm.excluded_members.push_back(x);
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (m.g[j] > 0) continue;
      LatticePoint far = x;
      far[j] = s.gap_extent()[j] + 1;
      mm.excluded_members.push_back(far);
    }
  }
  return mm;
}

inline bool verify_inequality(const AffineSemigroup& s, const ModularInequality& m) {
  return compare_with(s, m).ok();
}

/// Every listed gap is rejected and every other point of the scan region
/// {g.x < b} is accepted by the witness' band predicate.
inline bool verify_witness(const AffineSemigroup& s, const Witness& w) {
  if (w.dimension() != s.dimension()) return false;
  return verify_inequality(s, witness_to_inequality(w));
}

struct CheckOptions {
  std::size_t max_branches = default_max_branches();
  std::size_t max_refinements = 200;
  bool pareto_filter = true;
};

enum class Verdict { Yes, No, Unsupported };

struct CheckResult {
  Verdict verdict = Verdict::No;
  int case_id = 0;  // 0: S = N^n, 1: no e_i in S, 2: mixed
  std::optional<Witness> witness;
  std::optional<ModularInequality> inequality;
  std::string reason;
  std::size_t solves = 0;
};

namespace detail {

// Keeps the points that are extreme for a family of linear forms with
// positive weights on coordinates where dir = +1 and negative where dir = -1:
// a point is dropped when another point is at least as large in the
// dir-scaled order (so its constraint is implied).
inline std::vector<LatticePoint> pareto_extreme(std::vector<LatticePoint> pts, const std::vector<int>& dir) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto dominates = [&](const LatticePoint& a, const LatticePoint& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (dir[k] * (a[k] - b[k]) < 0) return false;
    return a != b;
  };
  std::vector<LatticePoint> out;
  for (const auto& x : pts) {
    bool beaten = std::any_of(pts.begin(), pts.end(), [&](const LatticePoint& y) { return dominates(y, x); });
    if (!beaten) out.push_back(x);
  }
  return out;
}

struct CoreVars {
  std::size_t t = 0, tail = 0;
  std::size_t u(std::size_t k) const { return k; }
  std::size_t v(std::size_t k) const { return t + k; }
  std::size_t w(std::size_t j) const { return 2 * t + j; }
  std::size_t z(std::size_t j) const { return 2 * t + tail + j; }
  std::size_t count() const { return 2 * t + 2 * tail; }
};

// i - sum_{k<t} x_k u_k - sum_j z_j x_{t+j}   (tau2 for band i)
inline LinearExpr tau2_expr(const CoreVars& cv, std::int64_t i, const LatticePoint& x) {
  LinearExpr e = LinearExpr::value(i);
  for (std::size_t k = 0; k < cv.t; ++k)
    if (x[k]) e += LinearExpr::var(cv.u(k), Rational(-x[k]));
  for (std::size_t j = 0; j < cv.tail; ++j)
    if (x[cv.t + j]) e += LinearExpr::var(cv.z(j), Rational(-x[cv.t + j]));
  return e;
}

// i - sum_{k<t} x_k v_k + sum_j w_j x_{t+j}   (tau1 for band i)
inline LinearExpr tau1_expr(const CoreVars& cv, std::int64_t i, const LatticePoint& x) {
  LinearExpr e = LinearExpr::value(i);
  for (std::size_t k = 0; k < cv.t; ++k)
    if (x[k]) e += LinearExpr::var(cv.v(k), Rational(-x[k]));
  for (std::size_t j = 0; j < cv.tail; ++j)
    if (x[cv.t + j]) e += LinearExpr::var(cv.w(j), Rational(x[cv.t + j]));
  return e;
}

inline std::vector<int> head_tail_dir(std::size_t t, std::size_t n, int head, int tail) {
  std::vector<int> d(n, tail);
  std::fill(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(t), head);
  return d;
}

// Hole index of x w.r.t. L, or 0 when x lies in no hole H_1..H_phi.
inline std::int64_t hole_index(const IntervalSystem& L, const LatticePoint& head) {
  if (std::all_of(head.begin(), head.end(), [](auto c) { return c == 0; })) return 0;
  std::int64_t i = to_i64(floor(weight_p(L, head))) + 1;
  if (i > phi_system(L)) return 0;
  if (i >= 2 && !(weight_q(L, head) > i - 1)) return 0;
  return i;
}

// One (minimal, maximal) interval choice per interval coordinate; returns a
// witness or nothing.
inline std::optional<Witness> check_tuple(const AffineSemigroup& s, std::size_t t,
                                          const std::vector<IntervalPair>& tuple,
                                          const std::vector<LatticePoint>& down_gens, int case_id,
                                          const std::vector<std::size_t>& perm, const CheckOptions& opt,
                                          std::size_t& solves) {
  const std::size_t n = s.dimension();
  std::vector<RationalInterval> mins, maxs;
  std::vector<bool> halfline;
  for (const auto& pr : tuple) {
    mins.push_back(pr.minimal);
    maxs.push_back(pr.maximal);
    halfline.push_back(pr.halfline());
  }
  IntervalSystem ltilde(mins, halfline);
  IntervalSystem lhat(maxs, halfline);
  const std::int64_t ph = phi_system(ltilde);
  const auto head = first_coords(t);

  // Condition 1: every gap sits over a hole of L~.
  std::vector<std::vector<LatticePoint>> hole_gaps(ph + 1), tail_gaps(ph + 1);
  for (const auto& h : s.gaps()) {
    std::int64_t i = hole_index(ltilde, project(h, head));
    if (i == 0) return std::nullopt;
    (has_tail(h, t) ? tail_gaps : hole_gaps)[i].push_back(h);
  }

  CoreVars cv{t, n - t};
  ConstraintSystem sys;
  for (std::size_t k = 0; k < t; ++k) sys.add_var("u" + std::to_string(k + 1));
  for (std::size_t k = 0; k < t; ++k) sys.add_var("v" + std::to_string(k + 1));
  for (std::size_t j = 0; j < cv.tail; ++j) sys.add_var("w" + std::to_string(t + j + 1));
  for (std::size_t j = 0; j < cv.tail; ++j) sys.add_var("z" + std::to_string(t + j + 1));
  auto U = [&](std::size_t k) { return LinearExpr::var(cv.u(k)); };
  auto V = [&](std::size_t k) { return LinearExpr::var(cv.v(k)); };
  auto C = [](const Rational& r) { return LinearExpr::value(r); };

  // Interval ranges: p^ < p <= p~ and q~ <= q < q^.
  for (std::size_t k = 0; k < t; ++k) {
    sys.hard.push_back(U(k) >= C(1 / mins[k].lo));
    sys.hard.push_back(U(k) < C(1 / maxs[k].lo));
    sys.hard.push_back(V(k) <= C(1 / *mins[k].hi));
    sys.hard.push_back(V(k) > C(maxs[k].hi ? 1 / *maxs[k].hi : Rational(0)));
  }
  for (std::size_t j = 0; j < cv.tail; ++j) {
    sys.hard.push_back(LinearExpr::var(cv.w(j)) >= C(0));
    sys.hard.push_back(LinearExpr::var(cv.z(j)) >= C(0));
  }

  auto filtered = [&](const std::vector<LatticePoint>& pts, int head_dir, int tail_dir) {
    if (!opt.pareto_filter) return vset(pts);
    return vset(pareto_extreme(pts, head_tail_dir(t, n, head_dir, tail_dir)));
  };

  // Gaps of S^d strictly between bands i-1 and i; then tail gaps likewise.
  for (std::int64_t i = 1; i <= ph; ++i) {
    for (const auto& x : filtered(hole_gaps[i], +1, +1)) sys.hard.push_back(tau2_expr(cv, i, x) > C(0));
    if (i >= 2)
      for (const auto& x : filtered(hole_gaps[i], -1, +1)) sys.hard.push_back(tau1_expr(cv, i - 1, x) < C(0));
    for (const auto& x : filtered(tail_gaps[i], +1, +1)) sys.hard.push_back(tau2_expr(cv, i, x) > C(0));
    for (const auto& x : filtered(tail_gaps[i], -1, +1)) sys.hard.push_back(tau1_expr(cv, i - 1, x) < C(0));
  }

  // Generators of S^d outside every band of L~ must land in some band m.
  std::vector<std::vector<ConstraintBlock>> omega;
  for (const auto& g : down_gens) {
    if (theta(ltilde, g) == 1) continue;
    std::int64_t kap = kappa(lhat, g);
    if (kap == 0) return std::nullopt;
    Rational floor_q = weight_q(lhat, g);
    LatticePoint full(n, 0);
    std::copy(g.begin(), g.end(), full.begin());
    std::vector<ConstraintBlock> alts;
    for (std::int64_t m = 1; m <= kap; ++m) {
      if (!(m > floor_q)) continue;
      alts.push_back({tau2_expr(cv, m, full) <= C(0), tau1_expr(cv, m, full) >= C(0)});
    }
    if (alts.empty()) return std::nullopt;
    if (alts.size() == 1) sys.hard.insert(sys.hard.end(), alts[0].begin(), alts[0].end());
    else omega.push_back(std::move(alts));
  }

  // Members of S^u next to prism gaps.
  std::vector<std::vector<ConstraintBlock>> gamma;
  if (cv.tail > 0) {
    for (const auto& pb : prism_regions(s, t, ltilde)) {
      const std::int64_t i = pb.i;
      for (const auto& b : (opt.pareto_filter ? pareto_extreme(pb.plus, head_tail_dir(t, n, -1, -1)) : pb.plus))
        sys.hard.push_back(tau2_expr(cv, i, b) <= C(0));
      for (const auto& g : (opt.pareto_filter ? pareto_extreme(pb.minus, head_tail_dir(t, n, +1, -1)) : pb.minus))
        sys.hard.push_back(tau1_expr(cv, i - 1, g) >= C(0));
      for (const auto& d : pb.star)
        gamma.push_back({{tau1_expr(cv, i - 1, d) >= C(0)}, {tau2_expr(cv, i, d) <= C(0)}});
    }
  }
  sys.disjunctions = std::move(omega);
  for (auto& g : gamma) sys.disjunctions.push_back(std::move(g));

  // Upper bound on the band index of any point: lower(P) <= sum P_k / q~_k.
  auto band_cap = [&](const LatticePoint& x) {
    Rational s_q = 0;
    for (std::size_t k = 0; k < t; ++k) s_q += Rational(x[k]) / *mins[k].hi;
    return to_i64(ceil(s_q));
  };

  for (std::size_t round = 0; round <= opt.max_refinements; ++round) {
    if (solves >= opt.max_branches) throw ResourceError("branch cap exceeded", solves);
    auto sol = solve_with_disjunctions(sys, opt.max_branches - solves, &solves);
    if (!sol) return std::nullopt;
    LinearParams lp;
    for (std::size_t k = 0; k < t; ++k) {
      lp.u.push_back(sol->witness[cv.u(k)]);
      lp.v.push_back(sol->witness[cv.v(k)]);
    }
    for (std::size_t j = 0; j < cv.tail; ++j) {
      lp.w.push_back(sol->witness[cv.w(j)]);
      lp.z.push_back(sol->witness[cv.z(j)]);
    }
    Witness wit = delinearize(lp, case_id, perm);
    Witness local = wit;
    std::iota(local.permutation.begin(), local.permutation.end(), std::size_t{0});
    Mismatch mm = compare_with(s, witness_to_inequality(local));
    if (mm.ok()) return wit;

    // Refine: pin wrong gaps between their bands, force wrong members into a band.
    for (const auto& h : mm.included_gaps) {
      std::int64_t i = hole_index(ltilde, project(h, head));
      sys.hard.push_back(tau2_expr(cv, i, h) > C(0));
      sys.hard.push_back(tau1_expr(cv, i - 1, h) < C(0));
    }
    std::size_t added = 0;
    for (const auto& x : mm.excluded_members) {
      if (added == 8) break;
      std::vector<ConstraintBlock> alts;
      for (std::int64_t k = 0, K = band_cap(x); k <= K; ++k)
        alts.push_back({tau1_expr(cv, k, x) >= C(0), tau2_expr(cv, k, x) <= C(0)});
      sys.disjunctions.push_back(std::move(alts));
      ++added;
    }
  }
  return std::nullopt;
}

// Cross product of the interval choices, first coordinate slowest.
inline std::optional<Witness> check_core(const AffineSemigroup& s, std::size_t t, int case_id,
                                         const std::vector<std::size_t>& perm, const CheckOptions& opt,
                                         std::size_t& solves, std::string& reason) {
  std::vector<std::vector<IntervalPair>> choices;
  for (std::size_t k = 0; k < t; ++k) {
    NumericalSemigroup axis = axis_semigroup(s, k);
    if (axis.is_whole()) throw InputError("axis " + std::to_string(k + 1) + " has no gaps");
    auto pairs = minimal_intervals(axis);
    if (pairs.empty()) {
      reason = "axis semigroup " + axis.str() + " is not proportionally modular";
      return std::nullopt;
    }
    choices.push_back(std::move(pairs));
  }

  std::vector<LatticePoint> down_gens;
  if (s.generators()) {
    for (const auto& g : *s.generators())
      if (!has_tail(g, t)) down_gens.push_back(project(g, first_coords(t)));
  } else {
    down_gens = (t == s.dimension() ? s : split_du(s, t)).minimal_generators();
  }

  std::vector<std::size_t> idx(t, 0);
  while (true) {
    std::vector<IntervalPair> tuple;
    for (std::size_t k = 0; k < t; ++k) tuple.push_back(choices[k][idx[k]]);
    if (auto w = check_tuple(s, t, tuple, down_gens, case_id, perm, opt, solves)) return w;
    std::size_t k = t;
    while (k > 0 && ++idx[k - 1] == choices[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
  }
  reason = "no interval choice admits a witness";
  return std::nullopt;
}

}  // namespace detail

/// Case 1: no unit vector lies in S.
inline std::optional<Witness> check_case1(const AffineSemigroup& s, const CheckOptions& opt = {}) {
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    LatticePoint e(s.dimension(), 0);
    e[k] = 1;
    if (s.contains(e)) throw InputError("case 1 needs e_" + std::to_string(k + 1) + " outside S");
  }
  std::vector<std::size_t> perm(s.dimension());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t solves = 0;
  std::string reason;
  return detail::check_core(s, s.dimension(), 1, perm, opt, solves, reason);
}

/// Case 2: e_1..e_t outside S, e_{t+1}..e_n inside.
inline std::optional<Witness> check_case2(const AffineSemigroup& s, std::size_t t, const CheckOptions& opt = {}) {
  if (t == 0 || t >= s.dimension()) throw InputError("case 2 needs 0 < t < n");
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    LatticePoint e(s.dimension(), 0);
    e[k] = 1;
    if (s.contains(e) != (k >= t))
      throw InputError("case 2 needs exactly the first t unit vectors outside S");
  }
  std::vector<std::size_t> perm(s.dimension());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t solves = 0;
  std::string reason;
  return detail::check_core(s, t, 2, perm, opt, solves, reason);
}

/// Runs one interval choice only; the first tuple.size() coordinates must be
/// the gap axes.
inline std::optional<Witness> check_with_choice(const AffineSemigroup& s, const std::vector<IntervalPair>& tuple,
                                                const CheckOptions& opt = {}) {
  const std::size_t t = tuple.size();
  if (t == 0 || t > s.dimension()) throw InputError("interval choice must cover 1..n coordinates");
  std::vector<std::size_t> perm(s.dimension());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<LatticePoint> down_gens = (t == s.dimension() ? s : split_du(s, t)).minimal_generators();
  std::size_t solves = 0;
  return detail::check_tuple(s, t, tuple, down_gens, t == s.dimension() ? 1 : 2, perm, opt, solves);
}

inline ModularInequality trivial_inequality(std::size_t n) {
  return ModularInequality::make(std::vector<Integer>(n, 0), 1, std::vector<Integer>(n, 1), false);
}

inline CheckResult check(const AffineSemigroup& s, const CheckOptions& opt = {}) {
  const std::size_t n = s.dimension();
  CheckResult res;
  if (s.is_whole()) {
    res.verdict = Verdict::Yes;
    res.case_id = 0;
    res.inequality = trivial_inequality(n);
    return res;
  }
  std::vector<std::size_t> gap_axes, full_axes;
  for (std::size_t k = 0; k < n; ++k) {
    LatticePoint e(n, 0);
    e[k] = 1;
    (s.contains(e) ? full_axes : gap_axes).push_back(k);
  }
  if (gap_axes.empty()) {
    res.verdict = Verdict::Unsupported;
    res.reason = "unsupported(t=0): every unit vector lies in S but gaps exist";
    return res;
  }
  std::vector<std::size_t> perm = gap_axes;
  perm.insert(perm.end(), full_axes.begin(), full_axes.end());
  const std::size_t t = gap_axes.size();
  res.case_id = t == n ? 1 : 2;
  AffineSemigroup local = permute(s, perm);
  std::optional<Witness> w = detail::check_core(local, t, res.case_id, perm, opt, res.solves, res.reason);
  if (!w) {
    res.verdict = Verdict::No;
    return res;
  }
  res.inequality = witness_to_inequality(*w);
  if (!verify_inequality(s, *res.inequality)) throw Error("internal: produced witness fails verification");
  res.verdict = Verdict::Yes;
  res.witness = std::move(w);
  return res;
}

}  // namespace propmod
