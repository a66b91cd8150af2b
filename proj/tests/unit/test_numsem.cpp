#include <gtest/gtest.h>

#include "oracles.hpp"
#include "propmod/propmod.hpp"

using namespace propmod;

namespace {

std::vector<std::int64_t> gaps_vec(const NumericalSemigroup& s) { return s.gaps(); }

}  // namespace

TEST(NumericalSemigroup, GapsMatchOracle) {
  const std::vector<std::vector<std::int64_t>> cases{
      {10, 11, 12, 13, 27}, {8, 9, 10, 11, 12, 15}, {2, 3}, {3, 4, 5}, {5, 7, 9}, {4, 6, 9}, {7, 8, 9, 10, 11, 12, 13}};
  for (const auto& gens : cases) {
    auto s = NumericalSemigroup::from_generators(gens);
    EXPECT_EQ(gaps_vec(s), oracle::gaps_of(gens)) << s.str();
    EXPECT_EQ(s.generators(), oracle::irreducible(s.gaps())) << s.str();
  }
}

TEST(NumericalSemigroup, RedundantGeneratorsDropped) {
  std::vector<std::int64_t> gens{10, 11, 12, 13, 27, 20, 33, 100};
  auto s = NumericalSemigroup::from_generators(gens);
  EXPECT_EQ(s.generators(), (std::vector<std::int64_t>{10, 11, 12, 13, 27}));
  EXPECT_EQ(s.multiplicity(), 10);
  EXPECT_EQ(s.frobenius(), 29);
  EXPECT_EQ(s.conductor(), 30);
}

TEST(NumericalSemigroup, FromGapsRoundTrip) {
  for (int g = 0; g <= 6; ++g)
    for (const auto& gaps : oracle::semigroups_of_genus(g)) {
      auto s = NumericalSemigroup::from_gaps(gaps);
      EXPECT_EQ(s.gaps(), gaps);
      EXPECT_EQ(s.genus(), static_cast<std::size_t>(g));
      EXPECT_EQ(NumericalSemigroup::from_generators(s.generators()), s);
    }
}

TEST(NumericalSemigroup, SpecialGapsMatchOracle) {
  for (int g = 1; g <= 6; ++g)
    for (const auto& gaps : oracle::semigroups_of_genus(g)) {
      auto s = NumericalSemigroup::from_gaps(gaps);
      EXPECT_EQ(special_gaps(s), oracle::special(gaps)) << s.str();
    }
}

TEST(NumericalSemigroup, WholeLine) {
  std::vector<std::int64_t> one{1};
  auto s = NumericalSemigroup::from_generators(one);
  EXPECT_TRUE(s.is_whole());
  EXPECT_EQ(s.frobenius(), -1);
  EXPECT_TRUE(s.contains(0));
  EXPECT_TRUE(s.contains(5));
}

TEST(NumericalSemigroup, RejectsBadInput) {
  std::vector<std::int64_t> even{2, 4}, empty{}, neg{3, -1};
  EXPECT_THROW(NumericalSemigroup::from_generators(even), InputError);
  EXPECT_THROW(NumericalSemigroup::from_generators(empty), InputError);
  EXPECT_THROW(NumericalSemigroup::from_generators(neg), InputError);
  EXPECT_THROW(NumericalSemigroup::from_gaps({2, 3}), InputError);
}

TEST(FromInterval, ExampleIntervals) {
  std::vector<std::int64_t> gens{10, 11, 12, 13, 27};
  auto s = NumericalSemigroup::from_generators(gens);
  EXPECT_EQ(from_interval(RationalInterval::closed(frac(27, 25), frac(10, 9))), s);
  EXPECT_EQ(from_interval(RationalInterval::closed(10, frac(27, 2))), s);
  std::vector<std::int64_t> gens2{8, 9, 10, 11, 12, 15};
  EXPECT_EQ(from_interval(RationalInterval::closed(frac(15, 2), 12)), NumericalSemigroup::from_generators(gens2));
}

TEST(FromInterval, MatchesDilationOracle) {
  for (std::int64_t a = 2; a <= 14; ++a)
    for (std::int64_t k = 1; k < a; ++k)
      for (std::int64_t c = 2; c <= 14; ++c)
        for (std::int64_t l = 1; l < c; ++l) {
          Rational p = frac(a, k), q = frac(c, l);
          if (q <= p) continue;
          for (int shape = 0; shape < 3; ++shape) {
            RationalInterval iv = shape == 0   ? RationalInterval::closed(p, q)
                                  : shape == 1 ? RationalInterval::open(p, q)
                                               : RationalInterval::halfline(p);
            auto s = from_interval(iv);
            std::optional<Rational> hi = shape == 2 ? std::nullopt : std::optional<Rational>(q);
            auto want = oracle::interval_gaps(p, hi, 2 * s.conductor() + 30, shape == 1, shape == 1);
            EXPECT_EQ(s.gaps(), want) << iv.str();
          }
        }
}
