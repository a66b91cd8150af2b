#pragma once

// Randomised property checks shared by the unit suite and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "propmod/propmod.hpp"

namespace props {

using namespace propmod;

struct Report {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

struct SmallIneq {
  std::vector<std::int64_t> f, g;
  std::int64_t b = 1;

  ModularInequality lib() const {
    std::vector<Integer> ff(f.begin(), f.end()), gg(g.begin(), g.end());
    return ModularInequality::make(ff, b, gg, false);
  }
  std::string str() const {
    std::ostringstream s;
    s << "f=(";
    for (std::size_t i = 0; i < f.size(); ++i) s << (i ? "," : "") << f[i];
    s << ") b=" << b << " g=(";
    for (std::size_t i = 0; i < g.size(); ++i) s << (i ? "," : "") << g[i];
    s << ")";
    return s.str();
  }
  // Box containing every gap: g.x < b.
  oracle::Point gap_box() const {
    oracle::Point box;
    for (auto c : g) box.push_back(b / c + 1);
    return box;
  }
};

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// b > f_i > g_i > 0 on head coordinates; g_j >= f_j, g_j > 0 on the tail;
// coordinates shuffled when `shuffle` is set.
inline SmallIneq random_shaped(std::mt19937_64& rng, std::size_t n, std::size_t head, std::int64_t bmax,
                               bool shuffle) {
  SmallIneq m;
  m.b = uniform(rng, 3, bmax);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < head) {
      std::int64_t f = uniform(rng, 2, m.b - 1);
      m.f.push_back(f);
      m.g.push_back(uniform(rng, 1, f - 1));
    } else {
      std::int64_t f = uniform(rng, 0, m.b - 1);
      m.f.push_back(f);
      m.g.push_back(std::max<std::int64_t>(1, f + uniform(rng, 0, m.b / 2)));
    }
  }
  if (shuffle) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    SmallIneq s = m;
    for (std::size_t i = 0; i < n; ++i) {
      s.f[i] = m.f[perm[i]];
      s.g[i] = m.g[perm[i]];
    }
    m = s;
  }
  return m;
}

inline std::vector<oracle::Point> to_points(const std::vector<LatticePoint>& v) { return {v.begin(), v.end()}; }

/// Membership through the modular inequality, the band index and two
/// brute-force oracles must agree on the whole scan box.
inline Report membership_equivalence(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Report r;
  for (std::size_t c = 0; c < count; ++c) {
    SmallIneq m;
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    m.b = uniform(rng, 2, 60);
    for (std::size_t i = 0; i < n; ++i) {
      m.f.push_back(uniform(rng, 0, m.b - 1));
      m.g.push_back(uniform(rng, 1, m.b));
    }
    ModularInequality lib = m.lib();
    oracle::Point box = m.gap_box();
    for (auto& v : box) v += 1;
    bool bad = false;
    oracle::for_box(box, [&](const oracle::Point& x) {
      bool a = ineq_membership(lib, x);
      bool b = band_membership(lib, x).has_value();
      bool c1 = oracle::ineq_member(m.f, m.b, m.g, x);
      bool c2 = oracle::band_member(m.f, m.b, m.g, x);
      if (!(a == b && b == c1 && c1 == c2)) bad = true;
    });
    ++r.cases;
    if (bad) r.fail(m.str());
  }
  return r;
}

/// check(gaps(M)) must say YES and the rebuilt inequality must have exactly
/// the oracle's gap set.
inline Report round_trip(std::size_t count, std::uint64_t seed, bool mixed) {
  std::mt19937_64 rng(seed);
  Report r;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t n, head;
    if (mixed) {
      n = static_cast<std::size_t>(uniform(rng, 2, 3));
      head = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(n) - 1));
    } else {
      n = static_cast<std::size_t>(uniform(rng, 1, 2));
      head = n;
    }
    SmallIneq m = random_shaped(rng, n, head, mixed ? 30 : 40, mixed);
    ++r.cases;
    try {
      auto expected = oracle::ineq_gaps(m.f, m.b, m.g, m.gap_box());
      AffineSemigroup s = gaps_from_inequality(m.lib());
      if (to_points(s.gaps()) != expected) {
        r.fail(m.str() + ": library gap set differs from oracle");
        continue;
      }
      CheckResult res = check(s);
      if (res.verdict != Verdict::Yes || !res.inequality || !res.witness) {
        r.fail(m.str() + ": not recognised (" + res.reason + ")");
        continue;
      }
      if (res.case_id != (mixed ? 2 : 1)) {
        r.fail(m.str() + ": wrong case");
        continue;
      }
      const ModularInequality& back = *res.inequality;
      std::vector<std::int64_t> f2, g2;
      for (const auto& v : back.f) f2.push_back(to_i64(v));
      for (const auto& v : back.g) g2.push_back(to_i64(v));
      SmallIneq rebuilt{f2, g2, to_i64(back.b)};
      oracle::Point box = m.gap_box();
      oracle::Point box2 = rebuilt.gap_box();
      for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], box2[i]);
      if (oracle::ineq_gaps(f2, rebuilt.b, g2, box) != expected) {
        r.fail(m.str() + ": rebuilt inequality " + rebuilt.str() + " has a different gap set");
        continue;
      }
      if (!verify_witness(s, *res.witness)) r.fail(m.str() + ": witness fails verification");
    } catch (const std::exception& e) {
      r.fail(m.str() + ": " + e.what());
    }
  }
  return r;
}

/// Gaps of 2D inequalities with f1 > g1 > 0, g2 >= f2 are exactly the
/// lattice points of the open triangles; each apex lies on both lines.
inline Report triangle_cover(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Report r;
  for (std::size_t c = 0; c < count; ++c) {
    SmallIneq m;
    m.b = uniform(rng, 4, 80);
    std::int64_t f1 = uniform(rng, 2, std::min<std::int64_t>(30, m.b - 1));
    std::int64_t g1 = uniform(rng, 1, f1 - 1);
    std::int64_t f2 = uniform(rng, 0, m.b - 1);
    std::int64_t g2 = std::max<std::int64_t>(1, f2 + uniform(rng, 0, 20));
    m.f = {f1, f2};
    m.g = {g1, g2};
    ++r.cases;
    ModularInequality lib = m.lib();
    std::vector<Triangle> tris;
    for (std::int64_t k = 1; k <= f1 / g1; ++k) tris.push_back(triangle_vertices(lib, k));
    bool bad = false;
    for (const auto& t : tris) {
      Rational on_f = f1 * t.apex.x + f2 * t.apex.y, on_g = g1 * t.apex.x + g2 * t.apex.y;
      if (on_f != Rational(t.k * m.b) || on_g != Rational(m.b)) bad = true;
    }
    oracle::Point box = m.gap_box();
    for (auto& v : box) v += 2;
    oracle::for_box(box, [&](const oracle::Point& x) {
      Point2 pt{x[0], x[1]};
      bool in_tri = std::any_of(tris.begin(), tris.end(), [&](const Triangle& t) { return in_open_triangle(t, pt); });
      if (in_tri == oracle::ineq_member(m.f, m.b, m.g, x)) bad = true;
    });
    if (!triangles_cover_check(lib, std::vector<std::int64_t>(box.begin(), box.end()))) bad = true;
    if (bad) r.fail(m.str());
  }
  return r;
}

/// Witnesses satisfy every constraint, refusals carry a valid certificate,
/// and no sampled grid point of a refused system is feasible.
inline Report feasibility_soundness(std::size_t count, std::uint64_t seed, std::size_t* infeasible_seen = nullptr) {
  std::mt19937_64 rng(seed);
  Report r;
  std::size_t infeasible = 0;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t nv = static_cast<std::size_t>(uniform(rng, 1, 6));
    std::size_t nc = static_cast<std::size_t>(uniform(rng, 1, nv <= 3 ? 40 : 10));
    ConstraintBlock cons;
    for (std::size_t k = 0; k < nc; ++k) {
      LinearExpr e = LinearExpr::value(uniform(rng, -5, 5));
      for (std::size_t j = 0; j < nv; ++j)
        if (uniform(rng, 0, 2) != 0) e += LinearExpr::var(j, Rational(uniform(rng, -3, 3)));
      int rel = static_cast<int>(uniform(rng, 0, 9));
      cons.push_back({e, rel < 5 ? Relation::Less : rel < 9 ? Relation::LessEqual : Relation::Equal});
    }
    ++r.cases;
    SolveResult res;
    try {
      res = solve(cons, nv);
    } catch (const std::exception& e) {
      r.fail(std::string("solve threw: ") + e.what());
      continue;
    }
    if (res.witness) {
      for (const auto& con : cons)
        if (!con.satisfied_by(*res.witness)) r.fail("witness violates a constraint");
      continue;
    }
    ++infeasible;
    if (!res.certificate || !check_certificate(cons, nv, *res.certificate)) {
      r.fail("refusal without a valid certificate");
      continue;
    }
    for (int s = 0; s < 300; ++s) {
      std::vector<Rational> x;
      for (std::size_t j = 0; j < nv; ++j) x.push_back(frac(uniform(rng, -16, 16), 4));
      if (std::all_of(cons.begin(), cons.end(), [&](const LinearConstraint& con) { return con.satisfied_by(x); })) {
        r.fail("refused system has a feasible grid point");
        break;
      }
    }
  }
  if (infeasible_seen) *infeasible_seen = infeasible;
  return r;
}

}  // namespace props
