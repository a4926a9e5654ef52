#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace subsidy;
using namespace subsidy::testing;

TEST(IntervalValue, Basics) {
  const Instance inst = staircase();
  EXPECT_EQ(interval_value(inst, 0, q(0), q(6)), inst.row_total(0));
  EXPECT_EQ(interval_value(inst, 0, q(2), q(2)), q(0));
  EXPECT_EQ(interval_value(inst, 0, q(0), q(3, 2) - q(1, 100)), q(149, 100));
  EXPECT_EQ(interval_value(inst, 1, q(9, 2), q(11, 2)), q(1, 2) * q(96, 100));
  EXPECT_THROW(interval_value(inst, 0, q(2), q(1)), Error);
  EXPECT_THROW(interval_value(inst, 0, q(0), q(7)), Error);
  EXPECT_THROW(interval_value(inst, 0, q(-1), q(1)), Error);
}

TEST(MovingKnife, StaircaseFractions) {
  const Instance inst = staircase();
  const auto [cuts, frac] = moving_knife(inst);
  const Matrix expected = {
      {1, q(49, 100), 0, 0, 0, 0},
      {0, q(51, 100), q(73, 100), 0, 0, 0},
      {0, 0, q(27, 100), q(73, 100), 0, 0},
      {0, 0, 0, q(27, 100), 1, 1},
  };
  EXPECT_EQ(frac.x, expected);
  EXPECT_EQ(cuts.order, (std::vector<AgentId>{0, 1, 2, 3}));
  EXPECT_EQ(cuts.cuts, (Row{q(149, 100), q(273, 100), q(373, 100)}));
  EXPECT_EQ(frac.provenance, Provenance::MovingKnife);
}

TEST(MovingKnife, StaircaseGeneralEpsilon) {
  const Rational eps(1, 1000);
  const auto [cuts, frac] = moving_knife(staircase(eps));
  EXPECT_EQ(frac.x[0][1], q(1, 2) - eps);
  EXPECT_EQ(frac.x[1][2], q(3, 4) - Rational(2) * eps);
  EXPECT_EQ(frac.x[2][3], q(3, 4) - Rational(2) * eps);
  EXPECT_EQ(frac.x[3][3], q(1, 4) + Rational(2) * eps);
}

TEST(MovingKnife, SingleAgent) {
  const Instance inst = make_instance(Mode::Chores, {{1, q(1, 2)}});
  const auto [cuts, frac] = moving_knife(inst);
  EXPECT_TRUE(cuts.cuts.empty());
  EXPECT_EQ(frac.x, (Matrix{{1, 1}}));
}

TEST(MovingKnife, RejectsNonIdo) {
  EXPECT_THROW(moving_knife(make_instance(Mode::Chores, {{0, 1}, {1, 0}})), Error);
}

TEST(MovingKnife, ZeroCostAgentTakesRest) {
  // agent 2's budget is 0, so her mark is m: she takes the whole line
  const Instance inst = make_instance(Mode::Chores, {{1, 1}, {0, 0}});
  const auto [cuts, frac] = moving_knife(inst);
  EXPECT_EQ(cuts.order, (std::vector<AgentId>{1, 0}));
  EXPECT_EQ(frac.x, (Matrix{{0, 0}, {1, 1}}));
}

TEST(MovingKnife, GoodsSmallestMarkWins) {
  const Instance inst = make_instance(Mode::Goods, {{1, 1, q(2, 3)}, {1, 1, 1}});
  const auto [cuts, frac] = moving_knife(inst);
  EXPECT_EQ(cuts.order, (std::vector<AgentId>{0, 1}));
  EXPECT_EQ(cuts.cuts, (Row{q(4, 3)}));
  EXPECT_EQ(frac.x[1][1], q(2, 3));
}

TEST(MovingKnife, FractionalPropSweep) {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::size_t m = 1 + seed % 12;
    const Mode mode = seed % 2 ? Mode::Chores : Mode::Goods;
    const Instance inst = to_ido(gen_random(n, m, seed, Family::Bimodal, mode)).transformed;
    const auto [cuts, frac] = moving_knife(inst);
    EXPECT_TRUE(frac.columns_sum_to_one()) << seed;
    EXPECT_LE(frac.fractional_items().size(), n - 1) << seed;
    for (AgentId i = 0; i < n; ++i) {
      const Rational have = bundle_value(inst, i, frac.x[i]);
      const Rational share = proportional_share(inst, i);
      if (mode == Mode::Chores)
        EXPECT_LE(have, share) << seed;
      else
        EXPECT_GE(have, share) << seed;
    }
  }
}
