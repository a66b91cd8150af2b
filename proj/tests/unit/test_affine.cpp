#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "properties.hpp"
#include "propmod/io.hpp"
#include "propmod/propmod.hpp"

using namespace propmod;

namespace {

ModularInequality ineq(std::vector<Integer> f, Integer b, std::vector<Integer> g) {
  return ModularInequality::make(std::move(f), std::move(b), std::move(g), false);
}

const std::vector<LatticePoint> kPrismGaps{{0, 1, 0}, {0, 2, 0}, {0, 2, 1}, {0, 5, 0}, {1, 0, 0},
                                           {1, 2, 0}, {1, 3, 0}, {1, 6, 0}, {2, 0, 0}, {2, 0, 1},
                                           {2, 3, 0}, {3, 0, 0}, {3, 1, 0}, {3, 4, 0}, {4, 1, 0}};

// Irreducible members by brute force over a box.
std::vector<LatticePoint> brute_generators(const AffineSemigroup& s, const std::vector<std::int64_t>& box) {
  std::vector<LatticePoint> out;
  oracle::for_box(box, [&](const oracle::Point& x) {
    if (!s.contains(x) || std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; })) return;
    bool red = false;
    oracle::for_box(x, [&](const oracle::Point& y) {
      if (red) return;
      oracle::Point z(x.size());
      bool zero_y = true, zero_z = true;
      for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = x[i] - y[i];
        zero_y &= y[i] == 0;
        zero_z &= z[i] == 0;
      }
      if (!zero_y && !zero_z && s.contains(y) && s.contains(z)) red = true;
    });
    if (!red) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Affine, PrismExampleGaps) {
  auto s = gaps_from_inequality(ineq({29, 11, 6}, 33, {6, 3, 15}));
  EXPECT_EQ(s.gaps(), kPrismGaps);
  EXPECT_EQ(s.dimension(), 3u);
  auto gens = s.minimal_generators();
  EXPECT_EQ(gens, brute_generators(s, {12, 12, 4}));
}

TEST(Affine, TwoDimensionalExample) {
  auto m = ineq({11, 15}, 110, {3, 6});
  auto s = gaps_from_inequality(m);
  auto a1 = axis_semigroup(s, 0), a2 = axis_semigroup(s, 1);
  std::vector<std::int64_t> g1{10, 11, 12, 13, 27}, g2{8, 9, 10, 11, 12, 15};
  EXPECT_EQ(a1, NumericalSemigroup::from_generators(g1));
  EXPECT_EQ(a2, NumericalSemigroup::from_generators(g2));

  auto doc = io::read_json_file(std::string(PROPMOD_DATA_DIR) + "/bands_2d.json");
  auto listed = io::semigroup_from_json(doc);
  ASSERT_TRUE(listed.generators());
  EXPECT_EQ(listed.generators()->size(), 61u);
  for (const auto& g : *listed.generators()) EXPECT_TRUE(ineq_membership(m, g)) << to_string(g);
  EXPECT_EQ(listed.gaps(), s.gaps());
  auto gens = s.minimal_generators();
  auto sorted = *listed.generators();
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(gens, sorted);
}

TEST(Affine, GapsMatchOracleOnRandomInequalities) {
  std::mt19937_64 rng(11);
  for (int c = 0; c < 60; ++c) {
    std::size_t n = static_cast<std::size_t>(props::uniform(rng, 1, 3));
    props::SmallIneq m;
    m.b = props::uniform(rng, 2, 40);
    for (std::size_t i = 0; i < n; ++i) {
      m.f.push_back(props::uniform(rng, 0, m.b - 1));
      m.g.push_back(props::uniform(rng, 1, m.b));
    }
    auto s = gaps_from_inequality(m.lib());
    EXPECT_EQ(props::to_points(s.gaps()), oracle::ineq_gaps(m.f, m.b, m.g, m.gap_box())) << m.str();
  }
}

TEST(Affine, MinimalGeneratorsMatchBruteForce) {
  std::mt19937_64 rng(12);
  for (int c = 0; c < 20; ++c) {
    props::SmallIneq m = props::random_shaped(rng, 2, 2, 25, false);
    auto s = gaps_from_inequality(m.lib());
    auto ext = s.gap_extent();
    std::vector<std::int64_t> box;
    for (auto e : ext) box.push_back(2 * (e + 1) + 1);
    EXPECT_EQ(s.minimal_generators(), brute_generators(s, box)) << m.str();
  }
}

TEST(Affine, MembershipEquivalence) {
  auto r = props::membership_equivalence(120, 21);
  EXPECT_GE(r.cases, 100u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Affine, BandIndex) {
  auto m = ineq({11, 15}, 110, {3, 6});
  EXPECT_EQ(band_membership(m, {0, 0}), Integer(0));
  EXPECT_EQ(band_membership(m, {10, 0}), Integer(1));
  EXPECT_FALSE(band_membership(m, {1, 0}).has_value());
}

TEST(Affine, RejectsInvalidSets) {
  EXPECT_THROW(AffineSemigroup(2, {{1, 0}, {0, 0}}), InputError);
  EXPECT_THROW(AffineSemigroup(2, {{1, 0, 0}}), InputError);
  EXPECT_THROW(AffineSemigroup(1, {{-1}}), InputError);
  // 1 and 2 members, 3 not: not closed.
  EXPECT_THROW(AffineSemigroup(1, {{3}}), InputError);
  EXPECT_THROW(AffineSemigroup(1, {{1}}, std::vector<LatticePoint>{{1}}), InputError);
  EXPECT_THROW(gaps_from_inequality(ineq({1, 1}, 3, {1, 0})), InputError);
}

TEST(Affine, Projections) {
  auto s = AffineSemigroup(3, kPrismGaps);
  EXPECT_EQ(project({3, 4, 5}, {0, 2}), (LatticePoint{3, 5}));
  EXPECT_TRUE(has_tail({0, 0, 1}, 2));
  EXPECT_FALSE(has_tail({4, 1, 0}, 2));
  auto du = split_du(s, 2);
  EXPECT_EQ(du.dimension(), 2u);
  EXPECT_EQ(du.gaps().size(), 13u);
  EXPECT_EQ(du.gaps(), sigma_slice(kPrismGaps, {0, 1}));
  EXPECT_THROW(split_du(s, 1), InputError);
}

TEST(Affine, VsetKeepsHullVertices) {
  std::vector<LatticePoint> pts{{0, 0}, {1, 1}, {2, 0}, {1, 3}, {0, 2}, {1, 2}};
  auto v = vset(pts);
  EXPECT_EQ(v, (std::vector<LatticePoint>{{0, 0}, {0, 2}, {1, 3}, {2, 0}}));
  EXPECT_EQ(vset({{4}, {1}, {3}}), (std::vector<LatticePoint>{{1}, {4}}));
}

TEST(Triangles, FigureExample) {
  auto m = ineq({11, 6}, 110, {3, 15});
  auto t1 = triangle_vertices(m, 1), t2 = triangle_vertices(m, 2), t3 = triangle_vertices(m, 3);
  EXPECT_EQ(t1.base_left, (Point2{0, 0}));
  EXPECT_EQ(t1.base_right, (Point2{10, 0}));
  EXPECT_EQ(t1.apex, (Point2{frac(330, 49), frac(880, 147)}));
  EXPECT_EQ(t2.base_left, (Point2{frac(55, 4), 0}));
  EXPECT_EQ(t2.base_right, (Point2{20, 0}));
  EXPECT_EQ(t2.apex, (Point2{frac(880, 49), frac(550, 147)}));
  EXPECT_EQ(t3.base_left, (Point2{frac(55, 2), 0}));
  EXPECT_EQ(t3.base_right, (Point2{30, 0}));
  EXPECT_EQ(t3.apex, (Point2{frac(1430, 49), frac(220, 147)}));
  auto [mu, nu] = triangle_edge_directions(t3);
  EXPECT_EQ(mu, (Point2{frac(9, 17), frac(8, 17)}));
  EXPECT_EQ(nu, (Point2{frac(6, 17), frac(11, 17)}));
  EXPECT_TRUE(triangles_cover_check(m));
}

TEST(Triangles, FromTriangleRecoversExample) {
  auto m = triangle_to_inequality({frac(330, 49), frac(880, 147)}, 10, frac(55, 4));
  auto ref = gaps_from_inequality(ineq({11, 6}, 110, {3, 15}));
  EXPECT_EQ(gaps_from_inequality(m).gaps(), ref.gaps());
  EXPECT_TRUE(triangles_cover_check(m));
}

TEST(Triangles, RandomCover) {
  auto r = props::triangle_cover(30, 31);
  EXPECT_GE(r.cases, 25u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Triangles, ShapeErrors) {
  EXPECT_THROW(triangles_cover_check(ineq({3, 1}, 10, {4, 2})), InputError);
  EXPECT_THROW(triangles_cover_check(ineq({5, 3}, 10, {2, 1})), InputError);
  EXPECT_THROW(triangle_vertices(ineq({5, 1}, 10, {2, 3}), 3), InputError);
}
