#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "propmod/bands.hpp"
#include "propmod/error.hpp"
#include "propmod/numsem.hpp"
#include "propmod/rational.hpp"

namespace propmod {

inline std::string to_string(const LatticePoint& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

/// Submonoid of N^n with finite complement, stored by its gap set.
class AffineSemigroup {
 public:
  AffineSemigroup() = default;

  AffineSemigroup(std::size_t n, std::vector<LatticePoint> gaps,
                  std::optional<std::vector<LatticePoint>> generators = std::nullopt)
      : n_(n), gaps_(std::move(gaps)), gens_(std::move(generators)) {
    if (n_ == 0) throw InputError("dimension must be positive");
    for (const auto& h : gaps_) check_point(h, "gap");
    std::sort(gaps_.begin(), gaps_.end());
    gaps_.erase(std::unique(gaps_.begin(), gaps_.end()), gaps_.end());
    for (const auto& h : gaps_)
      if (std::all_of(h.begin(), h.end(), [](auto c) { return c == 0; }))
        throw InputError("the origin cannot be a gap");
    check_closure();
    if (gens_) {
      for (const auto& g : *gens_) {
        check_point(g, "generator");
        if (!contains(g)) throw InputError("generator " + to_string(g) + " is listed as a gap");
      }
      std::sort(gens_->begin(), gens_->end());
    }
  }

  static AffineSemigroup whole(std::size_t n) { return AffineSemigroup(n, {}); }

  std::size_t dimension() const { return n_; }
  const std::vector<LatticePoint>& gaps() const { return gaps_; }
  const std::optional<std::vector<LatticePoint>>& generators() const { return gens_; }
  bool is_whole() const { return gaps_.empty(); }

  bool is_gap(const LatticePoint& x) const { return std::binary_search(gaps_.begin(), gaps_.end(), x); }
  bool contains(const LatticePoint& x) const {
    if (x.size() != n_) return false;
    if (std::any_of(x.begin(), x.end(), [](auto c) { return c < 0; })) return false;
    return !is_gap(x);
  }

  // Largest coordinate of any gap along each axis (0 when none).
  std::vector<std::int64_t> gap_extent() const {
    std::vector<std::int64_t> m(n_, 0);
    for (const auto& h : gaps_)
      for (std::size_t i = 0; i < n_; ++i) m[i] = std::max(m[i], h[i]);
    return m;
  }

  /// Minimal generating set. Any x with x_i >= 2(F_i + 1) splits as
  /// (F_i + 1)e_i + rest with both parts in S, so the box below suffices.
  std::vector<LatticePoint> minimal_generators() const {
    std::vector<std::int64_t> bound = gap_extent();
    for (auto& b : bound) b = 2 * (b + 1);
    std::vector<LatticePoint> pts;
    detail::for_each_in_box(bound, [&](const LatticePoint& x) {
      if (std::any_of(x.begin(), x.end(), [](auto c) { return c != 0; }) && contains(x)) pts.push_back(x);
    });
    auto total = [](const LatticePoint& x) {
      std::int64_t s = 0;
      for (auto c : x) s += c;
      return s;
    };
    std::stable_sort(pts.begin(), pts.end(),
                     [&](const LatticePoint& a, const LatticePoint& b) { return total(a) < total(b); });
    std::vector<LatticePoint> gens;
    LatticePoint diff(n_);
    for (const auto& x : pts) {
      bool reducible = false;
      for (const auto& g : gens) {
        bool below = true;
        for (std::size_t i = 0; i < n_ && below; ++i) {
          diff[i] = x[i] - g[i];
          below = diff[i] >= 0;
        }
        if (below && contains(diff)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) gens.push_back(x);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
  }

  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
    return a.n_ == b.n_ && a.gaps_ == b.gaps_;
  }

 private:
  void check_point(const LatticePoint& x, const char* what) const {
    if (x.size() != n_)
      throw InputError(std::string(what) + " " + to_string(x) + " has wrong dimension");
    if (std::any_of(x.begin(), x.end(), [](auto c) { return c < 0; }))
      throw InputError(std::string(what) + " " + to_string(x) + " has a negative coordinate");
  }

  // N^n \ gaps must be closed under addition: whenever a <= h is a nonzero
  // member below gap h, h - a is a gap.
  void check_closure() const {
    LatticePoint rest(n_);
    for (const auto& h : gaps_) {
      detail::for_each_in_box(h, [&](const LatticePoint& a) {
        if (a == h || std::all_of(a.begin(), a.end(), [](auto c) { return c == 0; })) return;
        if (is_gap(a)) return;
        for (std::size_t i = 0; i < n_; ++i) rest[i] = h[i] - a[i];
        if (!is_gap(rest))
          throw InputError("not a semigroup: " + to_string(a) + " + " + to_string(rest) + " = " +
                           to_string(h) + " is a gap");
      });
    }
  }

  std::size_t n_ = 0;
  std::vector<LatticePoint> gaps_;
  std::optional<std::vector<LatticePoint>> gens_;
};

/// f.x mod b <= g.x
struct ModularInequality {
  std::vector<Integer> f;
  Integer b = 1;
  std::vector<Integer> g;
  bool reduced = false;

  static ModularInequality make(std::vector<Integer> f, Integer b, std::vector<Integer> g, bool reduce = true) {
    if (b <= 0) throw InputError("modulus b must be positive");
    if (f.size() != g.size() || f.empty()) throw InputError("f and g must have the same positive length");
    for (auto& c : f) {
      if (c < 0) throw InputError("f must be nonnegative");
      if (reduce) c %= b;
    }
    return {std::move(f), std::move(b), std::move(g), reduce};
  }

  std::size_t dimension() const { return f.size(); }

  Integer f_dot(const LatticePoint& x) const { return dot(f, x); }
  Integer g_dot(const LatticePoint& x) const { return dot(g, x); }

  static Integer dot(const std::vector<Integer>& c, const LatticePoint& x) {
    if (c.size() != x.size()) throw InputError("point dimension does not match inequality");
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) s += c[i] * x[i];
    return s;
  }
};

inline bool ineq_membership(const ModularInequality& m, const LatticePoint& x) {
  Integer r = m.f_dot(x) % m.b;
  return r <= m.g_dot(x);
}

/// The band index i = floor(f.x / b) when x lies in F_i^+ and D_i^-.
inline std::optional<Integer> band_membership(const ModularInequality& m, const LatticePoint& x) {
  Integer fx = m.f_dot(x);
  Integer i = fx / m.b;
  if (fx - i * m.b <= m.g_dot(x)) return i;
  return std::nullopt;
}

/// Non-members of the inequality; all of them satisfy g.x < b.
inline AffineSemigroup gaps_from_inequality(const ModularInequality& m, std::size_t max_points = 50'000'000) {
  const std::size_t n = m.dimension();
  for (std::size_t i = 0; i < n; ++i)
    if (m.g[i] <= 0) throw InputError("complement may be infinite: g_" + std::to_string(i + 1) + " <= 0");
  std::vector<LatticePoint> gaps;
  LatticePoint x(n, 0);
  std::size_t visited = 0;
  // Depth-first over coordinates keeping the partial g.x below b.
  auto rec = [&](auto&& self, std::size_t j, const Integer& used) -> void {
    if (j == n) {
      if (++visited > max_points) throw ResourceError("gap scan region too large", visited);
      if (!ineq_membership(m, x)) gaps.push_back(x);
      return;
    }
    Integer acc = used;
    for (x[j] = 0; acc < m.b; ++x[j], acc += m.g[j]) self(self, j + 1, acc);
    x[j] = 0;
  };
  rec(rec, 0, Integer(0));
  return AffineSemigroup(n, std::move(gaps));
}

inline NumericalSemigroup axis_semigroup(const AffineSemigroup& s, std::size_t axis) {
  if (axis >= s.dimension()) throw InputError("axis out of range");
  std::vector<std::int64_t> gaps;
  for (const auto& h : s.gaps()) {
    bool on_axis = true;
    for (std::size_t j = 0; j < h.size(); ++j)
      if (j != axis && h[j] != 0) on_axis = false;
    if (on_axis) gaps.push_back(h[axis]);
  }
  return NumericalSemigroup::from_gaps(std::move(gaps));
}

inline LatticePoint project(const LatticePoint& x, const std::vector<std::size_t>& coords) {
  LatticePoint y;
  y.reserve(coords.size());
  for (auto c : coords) y.push_back(x.at(c));
  return y;
}

/// Points whose coordinates outside `coords` vanish, projected onto `coords`.
inline std::vector<LatticePoint> sigma_slice(const std::vector<LatticePoint>& pts,
                                             const std::vector<std::size_t>& coords) {
  std::vector<LatticePoint> out;
  for (const auto& x : pts) {
    bool keep = true;
    for (std::size_t j = 0; j < x.size() && keep; ++j)
      if (x[j] != 0 && std::find(coords.begin(), coords.end(), j) == coords.end()) keep = false;
    if (keep) out.push_back(project(x, coords));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> first_coords(std::size_t t) {
  std::vector<std::size_t> c(t);
  for (std::size_t i = 0; i < t; ++i) c[i] = i;
  return c;
}

inline bool has_tail(const LatticePoint& x, std::size_t t) {
  return std::any_of(x.begin() + static_cast<std::ptrdiff_t>(t), x.end(), [](auto c) { return c != 0; });
}

/// S^d: the slice of S on the first t coordinates. S^u (members with a
/// nonzero tail) is infinite and is queried through S::contains instead.
inline AffineSemigroup split_du(const AffineSemigroup& s, std::size_t t) {
  if (t == 0 || t > s.dimension()) throw InputError("split index out of range");
  for (std::size_t j = t; j < s.dimension(); ++j) {
    LatticePoint e(s.dimension(), 0);
    e[j] = 1;
    if (!s.contains(e))
      throw InputError("axis " + std::to_string(j + 1) + " is not N; cannot split at t=" + std::to_string(t));
  }
  return AffineSemigroup(t, sigma_slice(s.gaps(), first_coords(t)));
}

/// Gaps of one prism P_i together with the members of S^u next to them.
struct PrismBand {
  std::int64_t i = 0;
  std::vector<LatticePoint> gaps;       // all gaps in P_i
  std::vector<LatticePoint> tail_gaps;  // those with nonzero tail
  std::vector<LatticePoint> plus;       // alpha in S^u, alpha - e_j gap in P_i, j <= t
  std::vector<LatticePoint> minus;      // alpha in S^u, alpha + e_j gap in P_i, j <= t
  std::vector<LatticePoint> star;       // alpha - e_j gap in P_i for j > t, not in plus/minus
};

inline std::vector<PrismBand> prism_regions(const AffineSemigroup& s, std::size_t t, const IntervalSystem& ltilde) {
  const std::size_t n = s.dimension();
  if (ltilde.size() != t) throw InputError("interval system must cover the first t coordinates");
  auto sorted_unique = [](std::vector<LatticePoint>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  auto in_su = [&](const LatticePoint& a) { return has_tail(a, t) && s.contains(a); };

  const std::int64_t ph = phi_system(ltilde);
  std::vector<PrismBand> bands;
  const auto head = first_coords(t);
  for (std::int64_t i = 1; i <= ph; ++i) {
    PrismBand pb;
    pb.i = i;
    for (const auto& h : s.gaps())
      if (in_region(ltilde, Region::hole(i), project(h, head))) pb.gaps.push_back(h);
    for (const auto& h : pb.gaps) {
      if (has_tail(h, t)) pb.tail_gaps.push_back(h);
      for (std::size_t j = 0; j < n; ++j) {
        LatticePoint up = h;
        ++up[j];
        if (in_su(up)) (j < t ? pb.plus : pb.star).push_back(up);
        if (j < t && h[j] > 0) {
          LatticePoint down = h;
          --down[j];
          if (in_su(down)) pb.minus.push_back(down);
        }
      }
    }
    sorted_unique(pb.plus);
    sorted_unique(pb.minus);
    sorted_unique(pb.star);
    std::erase_if(pb.star, [&](const LatticePoint& a) {
      return std::binary_search(pb.plus.begin(), pb.plus.end(), a) ||
             std::binary_search(pb.minus.begin(), pb.minus.end(), a);
    });
    bands.push_back(std::move(pb));
  }
  return bands;
}

namespace detail {

inline __int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<__int128>(a[0] - o[0]) * (b[1] - o[1]) -
         static_cast<__int128>(a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace detail

/// Vertices of the convex hull in dimensions 1 and 2 (collinear points
/// dropped); higher dimensions return the deduplicated input.
inline std::vector<LatticePoint> vset(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  const std::size_t dim = pts.front().size();
  if (dim == 1) return {pts.front(), pts.back()};
  if (dim != 2) return pts;

  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 1 && pts.size() > 1) hull.push_back(pts.back());
  std::sort(hull.begin(), hull.end());
  return hull;
}

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// T_k = conv{((k-1)b/(f1-g1), 0), (kb/f1, 0), A_k}. The open variant drops the
/// two slanted edges.
struct Triangle {
  std::int64_t k = 0;
  Point2 base_left, base_right, apex;
  bool open_edges = true;
};

namespace detail {

inline void check_triangle_shape(const ModularInequality& m) {
  if (m.dimension() != 2) throw InputError("triangle layer needs a 2D inequality");
  if (!(m.f[0] > m.g[0] && m.g[0] > 0)) throw InputError("triangle layer needs f1 > g1 > 0");
  if (m.g[1] < m.f[1]) throw InputError("triangle layer needs g2 >= f2");
  if (!ineq_membership(m, {0, 1})) throw InputError("triangle layer needs e2 in S");
}

inline Rational orient(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace detail

inline Triangle triangle_vertices(const ModularInequality& m, std::int64_t k) {
  if (m.dimension() != 2) throw InputError("triangle layer needs a 2D inequality");
  const Integer &f1 = m.f[0], &f2 = m.f[1], &g1 = m.g[0], &g2 = m.g[1], &b = m.b;
  Integer det = f1 * g2 - f2 * g1;
  if (det == 0) throw InputError("degenerate triangle: f1 g2 = f2 g1");
  if (!(f1 > g1 && g1 > 0)) throw InputError("triangle layer needs f1 > g1 > 0");
  if (k < 1 || k * g1 > f1) throw InputError("triangle index out of range");
  Rational scale(b, det);
  Triangle t;
  t.k = k;
  t.base_left = {Rational(Integer(k - 1) * b, f1 - g1), 0};
  t.base_right = {Rational(Integer(k) * b, f1), 0};
  t.apex = {scale * (k * g2 - f2), scale * (f1 - k * g1)};
  return t;
}

/// mu: from base_left to the apex; nu: from base_right to the apex with the
/// first coordinate negated. Both scaled to coordinate sum 1.
inline std::pair<Point2, Point2> triangle_edge_directions(const Triangle& t) {
  Point2 mu{t.apex.x - t.base_left.x, t.apex.y - t.base_left.y};
  Point2 nu{t.base_right.x - t.apex.x, t.apex.y - t.base_right.y};
  Rational sm = mu.x + mu.y, sn = nu.x + nu.y;
  if (t.apex.y <= 0 || sm <= 0 || sn <= 0 || mu.x < 0 || nu.x < 0)
    throw InputError("degenerate triangle");
  return {{mu.x / sm, mu.y / sm}, {nu.x / sn, nu.y / sn}};
}

inline bool in_open_triangle(const Triangle& t, const Point2& p) {
  return detail::orient(t.base_left, t.base_right, p) >= 0 && detail::orient(t.base_right, t.apex, p) > 0 &&
         detail::orient(t.apex, t.base_left, p) > 0;
}

/// The 2D inequality whose first triangle has base [0, p], apex gamma, and whose
/// g-line meets the first axis at q.
inline ModularInequality triangle_to_inequality(const Point2& gamma, const Rational& p, const Rational& q) {
  const Rational &g1 = gamma.x, &g2 = gamma.y;
  if (g2 <= 0) throw InputError("degenerate triangle: apex on the axis");
  if (!(0 <= g1 && g1 <= p && p < q)) throw InputError("triangle_to_inequality needs 0 <= gamma1 <= p < q");

  auto den_lcm = [](std::initializer_list<Rational> xs) {
    Integer r = 1;
    for (const auto& x : xs) r = lcm(r, den(x));
    return r;
  };
  Integer r1 = den_lcm({g2, p - g1, p * g2});
  Integer r2 = den_lcm({(q - p) * g2, p * q - g1 * (q - p), p * q * g2});
  Rational a = r1 * p * g2, c = r2 * p * q * g2;
  Integer b = lcm(num(a), num(c));

  std::vector<Rational> fr{Rational(b) / p, b * (p - g1) / (p * g2)};
  std::vector<Rational> gr{b * (q - p) / (p * q), b * (p * q - g1 * (q - p)) / (p * q * g2)};
  Integer extra = 1;
  for (const auto& x : fr) extra = lcm(extra, den(x));
  for (const auto& x : gr) extra = lcm(extra, den(x));
  std::vector<Integer> f, g;
  for (const auto& x : fr) f.push_back(num(x * extra));
  for (const auto& x : gr) g.push_back(num(x * extra));
  return ModularInequality::make(std::move(f), b * extra, std::move(g), false);
}

/// Every point of the box is a member iff it avoids all open triangles.
inline bool triangles_cover_check(const ModularInequality& m, std::optional<std::vector<std::int64_t>> box = {}) {
  detail::check_triangle_shape(m);
  const std::int64_t kmax = to_i64(m.f[0] / m.g[0]);
  std::vector<Triangle> tris;
  for (std::int64_t k = 1; k <= kmax; ++k) tris.push_back(triangle_vertices(m, k));
  if (!box) {
    Rational xmax = 0, ymax = 0;
    for (const auto& t : tris) {
      xmax = std::max({xmax, t.base_right.x, t.apex.x});
      ymax = std::max(ymax, t.apex.y);
    }
    box = std::vector<std::int64_t>{to_i64(ceil(xmax)) + 2, to_i64(ceil(ymax)) + 2};
  }
  bool ok = true;
  detail::for_each_in_box(*box, [&](const LatticePoint& x) {
    Point2 pt{x[0], x[1]};
    bool in_tri = std::any_of(tris.begin(), tris.end(), [&](const Triangle& t) { return in_open_triangle(t, pt); });
    if (in_tri == ineq_membership(m, x)) ok = false;
  });
  return ok;
}

}  // namespace propmod
