#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace subsidy;
using namespace subsidy::testing;

TEST(EnvyGraph, Weights) {
  const Instance inst = make_instance(Mode::Chores, {{1, q(1, 2)}, {q(1, 4), 1}});
  const EnvyGraph g = make_envy_graph(inst, bundles({{0}, {1}}));
  EXPECT_EQ(g.weight[0][1], q(1, 2));
  EXPECT_EQ(g.weight[1][0], q(3, 4));
  EXPECT_EQ(g.basis, CostBasis::Original);
}

TEST(MaxPath, EnvyFreeNeedsNothing) {
  const Instance inst = make_instance(Mode::Chores, {{1, 0}, {0, 1}});
  const SubsidyVector s = max_path_subsidies(make_envy_graph(inst, bundles({{1}, {0}})));
  EXPECT_EQ(s.values, (Row{0, 0}));
}

TEST(MaxPath, SingleChore) {
  const Instance inst = gen_lower_bound_prop(2);
  const EnvyGraph g = make_envy_graph(inst, bundles({{0}, {}}));
  EXPECT_EQ(g.weight[0][1], q(1));
  EXPECT_EQ(g.weight[1][0], q(-1));
  EXPECT_EQ(max_path_subsidies(g).values, (Row{1, 0}));
}

TEST(MaxPath, PathsChain) {
  EnvyGraph g{{{0, q(1, 2), -1}, {-1, 0, q(1, 3)}, {-1, -1, 0}}, CostBasis::Original};
  EXPECT_EQ(max_path_subsidies(g).values, (Row{q(5, 6), q(1, 3), 0}));
}

TEST(MaxPath, PositiveCycle) {
  // each agent prefers the other's chore
  const Instance inst = make_instance(Mode::Chores, {{0, 1}, {1, 0}});
  const EnvyGraph g = make_envy_graph(inst, bundles({{1}, {0}}));
  EXPECT_TRUE(has_positive_cycle(g));
  try {
    max_path_subsidies(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PositiveCycle);
  }
}

TEST(Bounded, OneChoreTwoAgents) {
  const auto [alloc, rounds] = bounded_subsidy_allocate(gen_lower_bound_prop(2));
  EXPECT_EQ(rounds.dummies, 1u);
  EXPECT_EQ(rounds.rounds, (std::vector<std::vector<ItemId>>{{0, 1}}));
  EXPECT_EQ(alloc, bundles({{0}, {}}));
}

TEST(Bounded, LowerBoundFamily) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto [alloc, rounds] = bounded_subsidy_allocate(gen_lower_bound_efs(n));
    std::size_t singletons = 0, empty = 0;
    for (const auto& b : alloc.bundles) {
      if (b.size() == 1) ++singletons;
      if (b.empty()) ++empty;
    }
    EXPECT_EQ(singletons, n - 1);
    EXPECT_EQ(empty, 1u);
  }
}

TEST(Bounded, AllZeroCostsEnvyFree) {
  const Instance inst = make_instance(Mode::Chores, {{0, 0, 0}, {0, 0, 0}});
  const EfsResult r = efs_solve(inst);
  EXPECT_TRUE(r.allocation.is_partition(3));
  EXPECT_TRUE(fairness_report(inst, r.allocation).ef);
  EXPECT_EQ(r.subsidies.total(), q(0));
}

TEST(Bounded, RoundsMatchEnumeration) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const Instance inst = gen_random(n, 1 + seed % 7, seed, Family::Bimodal);
    const auto [alloc, rounds] = bounded_subsidy_allocate(inst);
    std::vector<bool> gone(rounds.real_items + rounds.dummies, false);
    for (const auto& round : rounds.rounds) {
      std::vector<ItemId> pool;
      for (ItemId e = 0; e < gone.size(); ++e)
        if (!gone[e]) pool.push_back(e);
      Matrix w(n, Row(pool.size()));
      Rational got;
      for (AgentId i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < pool.size(); ++k) w[i][k] = padded_cost(inst, i, pool[k]);
        got += padded_cost(inst, i, round[i]);
        gone[round[i]] = true;
      }
      EXPECT_EQ(got, brute_min_matching(w)) << seed;
    }
  }
}

TEST(Constructed, SingleRoundIsIdentity) {
  const Instance inst = make_instance(Mode::Chores, {{1, q(1, 2), 0}, {q(1, 3), 1, q(1, 4)}, {0, 0, 1}});
  const auto [alloc, rounds] = bounded_subsidy_allocate(inst);
  ASSERT_EQ(rounds.count(), 1u);
  EXPECT_EQ(constructed_costs(inst, rounds), inst.matrix);
}

TEST(Constructed, TwoAgentsFourItems) {
  const Row c = {1, q(3, 5), q(2, 5), 0};
  const Instance inst = make_instance(Mode::Chores, {c, c});
  const auto [alloc, rounds] = bounded_subsidy_allocate(inst);
  // both minimum matchings of round 1 use e3 and e4; the smaller column
  // vector gives e3 to agent 1
  EXPECT_EQ(rounds.rounds, (std::vector<std::vector<ItemId>>{{2, 3}, {0, 1}}));
  const Matrix bar = constructed_costs(inst, rounds);
  EXPECT_EQ(bar[1][2], q(2, 5));  // min(c(e3), c(e2))
  EXPECT_EQ(bar[0][3], q(0));     // min(c(e4), c(e1))
  EXPECT_EQ(bar[0][1], q(3, 5));  // last round keeps c
  EXPECT_EQ(bar[1][0], q(1));
}

TEST(Constructed, NeverAboveOriginalEqualOnOwn) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const Instance inst = gen_random(n, 1 + seed % 9, seed, Family::UniformRational);
    const auto [alloc, rounds] = bounded_subsidy_allocate(inst);
    const Matrix bar = constructed_costs(inst, rounds);
    for (AgentId i = 0; i < n; ++i) {
      for (ItemId e = 0; e < inst.items(); ++e) EXPECT_LE(bar[i][e], inst.at(i, e));
      for (ItemId e : alloc.bundles[i]) EXPECT_EQ(bar[i][e], inst.at(i, e));
    }
  }
}

TEST(Efs, LowerBoundFamily) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const EfsResult r = efs_solve(gen_lower_bound_efs(n));
    EXPECT_EQ(r.subsidies.total(), Rational(static_cast<std::int64_t>(n) - 1));
  }
}

TEST(Efs, EnvyFreeAchievable) {
  const Instance inst = make_instance(Mode::Chores, {{1, 0}, {0, 1}});
  const EfsResult r = efs_solve(inst);
  EXPECT_EQ(r.allocation, bundles({{1}, {0}}));
  EXPECT_EQ(r.subsidies.values, (Row{0, 0}));
}

TEST(Efs, RejectsGoods) { EXPECT_THROW(efs_solve(gen_lower_bound_prop(2, Mode::Goods)), Error); }

TEST(Efs, SweepThreeBySeven) {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const Instance inst = gen_random(3, 7, seed, Family::UniformRational);
    const EfsResult r = efs_solve(inst);
    const FairnessReport f = fairness_report(inst, r.allocation, r.subsidies);
    EXPECT_TRUE(f.ef1) << seed;
    EXPECT_TRUE(f.efs.value()) << seed;
    EXPECT_FALSE(has_positive_cycle(make_envy_graph(inst, r.allocation))) << seed;
    EXPECT_FALSE(has_positive_cycle(make_envy_graph(r.constructed, r.allocation, CostBasis::Constructed)));
    Rational lowest(1);
    for (const auto& s : r.subsidies.values) {
      EXPECT_GE(s, q(0));
      EXPECT_LE(s, q(1));
      lowest = min(lowest, s);
    }
    EXPECT_EQ(lowest, q(0)) << seed;
    EXPECT_LE(r.subsidies.total(), q(2)) << seed;
  }
}
