#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propmod/error.hpp"
#include "propmod/rational.hpp"

namespace propmod {

/// sum coef_j x_j + constant. Coefficient vectors may be shorter than the
/// variable count; missing entries are zero.
struct LinearExpr {
  std::vector<Rational> coef;
  Rational constant = 0;

  static LinearExpr var(std::size_t j, Rational c = 1) {
    LinearExpr e;
    e.coef.assign(j + 1, Rational(0));
    e.coef[j] = std::move(c);
    return e;
  }
  static LinearExpr value(Rational c) {
    LinearExpr e;
    e.constant = std::move(c);
    return e;
  }

  LinearExpr& operator+=(const LinearExpr& o) {
    if (coef.size() < o.coef.size()) coef.resize(o.coef.size(), Rational(0));
    for (std::size_t j = 0; j < o.coef.size(); ++j) coef[j] += o.coef[j];
    constant += o.constant;
    return *this;
  }
  LinearExpr& operator*=(const Rational& k) {
    for (auto& c : coef) c *= k;
    constant *= k;
    return *this;
  }
  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, LinearExpr b) { return a += (b *= Rational(-1)); }
  friend LinearExpr operator*(Rational k, LinearExpr a) { return a *= k; }

  Rational eval(const std::vector<Rational>& x) const {
    Rational s = constant;
    for (std::size_t j = 0; j < coef.size() && j < x.size(); ++j)
      if (coef[j] != 0) s += coef[j] * x[j];
    return s;
  }
};

enum class Relation { Less, LessEqual, Equal };

/// expr (<, <=, =) 0
struct LinearConstraint {
  LinearExpr expr;
  Relation rel = Relation::LessEqual;

  bool satisfied_by(const std::vector<Rational>& x) const {
    Rational v = expr.eval(x);
    switch (rel) {
      case Relation::Less: return v < 0;
      case Relation::LessEqual: return v <= 0;
      case Relation::Equal: return v == 0;
    }
    return false;
  }
};

inline LinearConstraint operator<(const LinearExpr& a, const LinearExpr& b) { return {a - b, Relation::Less}; }
inline LinearConstraint operator<=(const LinearExpr& a, const LinearExpr& b) { return {a - b, Relation::LessEqual}; }
inline LinearConstraint operator>(const LinearExpr& a, const LinearExpr& b) { return {b - a, Relation::Less}; }
inline LinearConstraint operator>=(const LinearExpr& a, const LinearExpr& b) { return {b - a, Relation::LessEqual}; }
inline LinearConstraint equal(const LinearExpr& a, const LinearExpr& b) { return {a - b, Relation::Equal}; }

using ConstraintBlock = std::vector<LinearConstraint>;

struct ConstraintSystem {
  std::vector<std::string> names;
  ConstraintBlock hard;
  // Each group: pick exactly one alternative block.
  std::vector<std::vector<ConstraintBlock>> disjunctions;

  std::size_t add_var(std::string name) {
    names.push_back(std::move(name));
    return names.size() - 1;
  }
  std::size_t size() const { return names.size(); }
};

/// Nonnegative combination (free on equalities) of the input constraints
/// whose variable part cancels and whose constant contradicts the relation.
struct Certificate {
  std::vector<std::pair<std::size_t, Rational>> multipliers;
};

struct SolveResult {
  std::optional<std::vector<Rational>> witness;
  std::optional<Certificate> certificate;
  explicit operator bool() const { return witness.has_value(); }
};

inline bool check_certificate(const ConstraintBlock& cons, std::size_t nvars, const Certificate& cert) {
  std::vector<Rational> sum(nvars, Rational(0));
  Rational constant = 0;
  bool strict = false;
  for (const auto& [idx, lam] : cert.multipliers) {
    if (idx >= cons.size()) return false;
    const auto& c = cons[idx];
    if (c.rel != Relation::Equal && lam < 0) return false;
    if (lam == 0) continue;
    for (std::size_t j = 0; j < c.expr.coef.size(); ++j) {
      if (c.expr.coef[j] == 0) continue;
      if (j >= nvars) return false;
      sum[j] += lam * c.expr.coef[j];
    }
    constant += lam * c.expr.constant;
    if (c.rel == Relation::Less && lam > 0) strict = true;
  }
  if (std::any_of(sum.begin(), sum.end(), [](const Rational& v) { return v != 0; })) return false;
  return constant > 0 || (constant == 0 && strict);
}

namespace detail {

using Lambda = std::vector<std::pair<std::size_t, Rational>>;

struct FmRow {
  std::vector<Rational> a;
  Rational c;
  bool strict = false;
  Lambda lambda;
};

inline Lambda combine(const Lambda& x, const Rational& kx, const Lambda& y, const Rational& ky) {
  Lambda out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, x[i].second * kx);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, y[j].second * ky);
      ++j;
    } else {
      Rational v = x[i].second * kx + y[j].second * ky;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Scale so the first nonzero coefficient has magnitude 1.
inline void normalize(FmRow& r) {
  for (const auto& v : r.a) {
    if (v == 0) continue;
    Rational k = v < 0 ? Rational(-1) / v : Rational(1) / v;
    if (k == 1) return;
    for (auto& x : r.a) x *= k;
    r.c *= k;
    for (auto& [idx, lam] : r.lambda) lam *= k;
    return;
  }
}

inline bool is_zero_row(const FmRow& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const Rational& v) { return v == 0; });
}

inline bool contradicts(const FmRow& r) { return r.c > 0 || (r.c == 0 && r.strict); }

struct Stage {
  std::size_t var;
  std::vector<FmRow> rows;  // rows with nonzero coefficient on var at elimination time
};

}  // namespace detail

/// Fourier-Motzkin elimination with strict/weak bookkeeping. A feasible
/// system yields an exact satisfying point; an infeasible one yields a
/// Farkas-style certificate over the input constraints.
inline SolveResult solve(const ConstraintBlock& cons, std::size_t nvars, std::size_t max_rows = 200'000) {
  using detail::FmRow;
  std::vector<FmRow> rows;
  for (std::size_t idx = 0; idx < cons.size(); ++idx) {
    const auto& c = cons[idx];
    if (c.expr.coef.size() > nvars) {
      for (std::size_t j = nvars; j < c.expr.coef.size(); ++j)
        if (c.expr.coef[j] != 0) throw InputError("constraint uses an undeclared variable");
    }
    FmRow r;
    r.a.assign(nvars, Rational(0));
    for (std::size_t j = 0; j < std::min(nvars, c.expr.coef.size()); ++j) r.a[j] = c.expr.coef[j];
    r.c = c.expr.constant;
    r.strict = c.rel == Relation::Less;
    r.lambda = {{idx, Rational(1)}};
    if (c.rel == Relation::Equal) {
      FmRow neg = r;
      for (auto& v : neg.a) v = -v;
      neg.c = -neg.c;
      neg.lambda = {{idx, Rational(-1)}};
      rows.push_back(std::move(neg));
    }
    rows.push_back(std::move(r));
  }

  SolveResult res;
  std::vector<detail::Stage> stages;
  std::vector<char> eliminated(nvars, 0);

  // Drops constant rows (returning false on a contradiction) and merges
  // parallel rows, keeping the tightest.
  auto tidy = [&](std::vector<FmRow>& rs) -> bool {
    std::map<std::vector<Rational>, std::size_t> seen;
    std::vector<FmRow> out;
    for (auto& r : rs) {
      if (detail::is_zero_row(r)) {
        if (detail::contradicts(r)) {
          res.certificate = Certificate{std::move(r.lambda)};
          return false;
        }
        continue;
      }
      detail::normalize(r);
      auto [it, fresh] = seen.emplace(r.a, out.size());
      if (fresh) {
        out.push_back(std::move(r));
      } else {
        FmRow& old = out[it->second];
        if (r.c > old.c || (r.c == old.c && r.strict && !old.strict)) old = std::move(r);
      }
    }
    rs = std::move(out);
    return true;
  };

  if (!tidy(rows)) return res;

  while (true) {
    // Variable whose elimination creates the fewest new rows.
    std::optional<std::size_t> best;
    long long best_cost = 0;
    for (std::size_t j = 0; j < nvars; ++j) {
      if (eliminated[j]) continue;
      long long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[j] > 0) ++pos;
        else if (r.a[j] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      long long cost = pos * neg - pos - neg;
      if (!best || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    if (!best) break;
    const std::size_t j = *best;
    eliminated[j] = 1;

    detail::Stage st{j, {}};
    std::vector<FmRow> keep, pos, neg;
    for (auto& r : rows) {
      if (r.a[j] > 0) pos.push_back(std::move(r));
      else if (r.a[j] < 0) neg.push_back(std::move(r));
      else keep.push_back(std::move(r));
    }
    if (keep.size() + pos.size() * neg.size() > max_rows)
      throw ResourceError("Fourier-Motzkin row count exceeded", keep.size() + pos.size() * neg.size());
    for (const auto& p : pos) {
      Rational kp = Rational(1) / p.a[j];
      for (const auto& q : neg) {
        Rational kq = Rational(-1) / q.a[j];
        FmRow r;
        r.a.resize(nvars);
        for (std::size_t k = 0; k < nvars; ++k) r.a[k] = p.a[k] * kp + q.a[k] * kq;
        r.a[j] = 0;
        r.c = p.c * kp + q.c * kq;
        r.strict = p.strict || q.strict;
        r.lambda = detail::combine(p.lambda, kp, q.lambda, kq);
        keep.push_back(std::move(r));
      }
    }
    st.rows = std::move(pos);
    st.rows.insert(st.rows.end(), std::make_move_iterator(neg.begin()), std::make_move_iterator(neg.end()));
    stages.push_back(std::move(st));
    rows = std::move(keep);
    if (!tidy(rows)) return res;
  }

  std::vector<Rational> x(nvars, Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t j = it->var;
    std::optional<Rational> lo, hi;
    for (const auto& r : it->rows) {
      Rational rest = r.c;
      for (std::size_t k = 0; k < nvars; ++k)
        if (k != j && r.a[k] != 0) rest += r.a[k] * x[k];
      Rational bound = -rest / r.a[j];
      if (r.a[j] > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (lo && hi) x[j] = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
    else if (lo) x[j] = *lo + 1;
    else if (hi) x[j] = *hi - 1;
    else x[j] = 0;
  }
  for (const auto& c : cons)
    if (!c.satisfied_by(x)) throw Error("internal: Fourier-Motzkin witness violates a constraint");
  res.witness = std::move(x);
  return res;
}

struct DisjunctiveSolution {
  std::vector<Rational> witness;
  std::vector<std::size_t> choice;  // alternative index per group
  std::size_t solves = 0;
};

inline std::size_t default_max_branches() {
  if (const char* env = std::getenv("PROPMOD_MAX_BRANCHES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

/// Depth-first over groups in order, alternatives in index order, cutting
/// infeasible prefixes. The first complete feasible branch found is the
/// lexicographically least one.
inline std::optional<DisjunctiveSolution> solve_with_disjunctions(const ConstraintSystem& sys,
                                                                  std::size_t max_branches = default_max_branches(),
                                                                  std::size_t* solve_count = nullptr) {
  const std::size_t n = sys.size();
  std::size_t local = 0;
  std::size_t& solves = solve_count ? *solve_count : local;
  const std::size_t start = solves;
  auto counted_solve = [&](const ConstraintBlock& cons) {
    if (++solves - start > max_branches) throw ResourceError("branch cap exceeded", solves);
    return solve(cons, n);
  };

  ConstraintBlock active = sys.hard;
  SolveResult base = counted_solve(active);
  if (!base) return std::nullopt;
  if (sys.disjunctions.empty()) return DisjunctiveSolution{*base.witness, {}, solves};

  std::vector<std::size_t> choice;
  std::optional<DisjunctiveSolution> found;
  auto rec = [&](auto&& self, std::size_t g) -> bool {
    if (g == sys.disjunctions.size()) return true;
    const auto& group = sys.disjunctions[g];
    for (std::size_t a = 0; a < group.size(); ++a) {
      const std::size_t mark = active.size();
      active.insert(active.end(), group[a].begin(), group[a].end());
      SolveResult r = counted_solve(active);
      if (r) {
        choice.push_back(a);
        if (g + 1 == sys.disjunctions.size()) {
          found = DisjunctiveSolution{*r.witness, choice, solves};
          return true;
        }
        if (self(self, g + 1)) return true;
        choice.pop_back();
      }
      active.resize(mark);
    }
    return false;
  };
  rec(rec, 0);
  if (found) found->solves = solves;
  return found;
}

}  // namespace propmod
