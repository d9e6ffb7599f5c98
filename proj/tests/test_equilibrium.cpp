//------------------------------------------------------------------------------
//
//   Copyright 2026 The mechfront Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#include "mechfront/equilibrium.hpp"
#include "mechfront/errors.hpp"
#include "mechfront/instance_lab.hpp"
#include "mechfront/parallel.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace mechfront;

namespace {

using V = std::vector<double>;

std::vector<double> decimal_points(int count, int denom)
{
  std::vector<double> p;
  for (int k = 0; k < count; ++k)
  {
    p.push_back(k / static_cast<double>(denom));
  }
  return p;
}

oracle::Rule oracle_rule(MechanismId const &mech)
{
  switch (mech.kind)
  {
  case MechanismKind::kFirstPrice:
    return [](V const &b) { return oracle::fp(b); };
  case MechanismKind::kSecondPrice:
    return [](V const &b) { return oracle::sp(b); };
  default:
  {
    double const a = mech.alpha;
    return [a](V const &b) { return oracle::spa(a, b); };
  }
  }
}

}  // namespace

TEST(VerifyEquilibrium, SecondPriceBadEquilibrium)
{
  SingleTaskRule const sp(MechanismId::second_price());
  auto const           res = verify_equilibrium(sp, V{0, 0.1}, V{1, 0}, Grid(0.1, 2));
  EXPECT_TRUE(res.equilibrium);
  EXPECT_FALSE(res.deviation.has_value());
  EXPECT_EQ(res.checked_deviations, 2U * 22U);
}

TEST(VerifyEquilibrium, FirstPriceLosingBidIsUnstable)
{
  SingleTaskRule const fp(MechanismId::first_price());
  auto const           res = verify_equilibrium(fp, V{1, 2}, V{0.5, 2}, Grid(0.1, 4));
  ASSERT_FALSE(res.equilibrium);
  ASSERT_TRUE(res.deviation.has_value());
  EXPECT_EQ(res.deviation->machine, 0U);
  EXPECT_EQ(res.deviation->utility_before, -0.5);
  // Matching the opponent's bid wins the tie at index 0 and is the best
  // response on the grid.
  EXPECT_EQ(res.deviation->bid, 2.0);
  EXPECT_EQ(res.deviation->utility_after, 1.0);
}

TEST(VerifyEquilibrium, SecondPriceTruthTellingIsStable)
{
  SingleTaskRule const sp(MechanismId::second_price());
  Grid const           grid(0.1, 6);
  for (std::uint64_t seed = 0; seed < 40; ++seed)
  {
    auto const t = gen_random(3, 1, seed, 0, 5, 0.1).column(0);
    EXPECT_TRUE(verify_equilibrium(sp, t, t, grid)) << "seed " << seed;
  }
}

TEST(VerifyEquilibrium, RejectsOffGridAndBadShapes)
{
  SingleTaskRule const sp(MechanismId::second_price());
  EXPECT_THROW(verify_equilibrium(sp, V{1, 2}, V{1.05, 2}, Grid(0.1, 4)), std::invalid_argument);
  EXPECT_THROW(verify_equilibrium(sp, V{1, 2}, V{1}, Grid(0.1, 4)), std::invalid_argument);
  EXPECT_THROW(verify_equilibrium(sp, V{1}, V{1}, Grid(0.1, 4)), std::invalid_argument);
}

TEST(Enumerate, ReserveExampleWinnerSet)
{
  SingleTaskRule const spa(MechanismId::reserve_price(2));
  auto const           set = enumerate_equilibria(spa, V{1, 1.9, 1e6}, Grid(0.1, 4));
  EXPECT_EQ(set.winner_set(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(set.profiles_evaluated(), 41.0 * 41 * 41);
  for (std::size_t k = 0; k < set.size(); ++k)
  {
    auto const cert = set.certificate(k);
    EXPECT_EQ(cert.scope, EquilibriumCertificate::Scope::kGrid);
    EXPECT_EQ(cert.winner, set.winner(k));
  }
}

TEST(Enumerate, FirstPriceWinnersAreFastest)
{
  SingleTaskRule const fp(MechanismId::first_price());
  auto const           set = enumerate_equilibria(fp, V{1, 2}, Grid(0.1, 4));
  ASSERT_FALSE(set.empty());
  for (std::size_t k = 0; k < set.size(); ++k)
  {
    EXPECT_EQ(set.winner(k), 0U);
  }
}

TEST(Enumerate, SingleMachine)
{
  SingleTaskRule const fp(MechanismId::first_price());
  auto const           set = enumerate_equilibria(fp, V{1.5}, Grid(0.1, 3));
  EXPECT_EQ(set.winner_set(), (std::vector<std::size_t>{0}));
  // Alone, the machine bids the cap.
  ASSERT_EQ(set.size(), 1U);
  EXPECT_EQ(set.bids(0), V{3.0});
}

TEST(Enumerate, KernelMatchesReference)
{
  std::vector<SingleTaskRule> rules{
      SingleTaskRule(MechanismId::first_price()), SingleTaskRule(MechanismId::second_price()),
      SingleTaskRule(MechanismId::reserve_price(1.5)),
      SingleTaskRule::custom("overpay", [](std::span<double const> b, std::span<double> p) {
        std::size_t const w = lowest_bidder(b);
        std::fill(p.begin(), p.end(), 0.0);
        p[w] = 2 * b[w] + 0.25;
        return w;
      })};
  Grid const grid(0.25, 3);
  for (auto const &rule : rules)
  {
    for (std::uint64_t seed = 0; seed < 6; ++seed)
    {
      auto const t   = gen_random(3, 1, seed, 0.25, 2.5, 0.25).column(0);
      auto const fast = enumerate_equilibria(rule, t, grid);
      auto const slow = enumerate_equilibria_reference(rule, t, grid);
      EXPECT_TRUE(fast.same_profiles(slow)) << rule.name() << " seed " << seed;
    }
  }
}

TEST(Enumerate, MatchesNaiveOracle)
{
  // Grid 0, 0.5, ..., 3 plus the withdraw bid 3.5.
  auto const points = decimal_points(7, 2);
  auto       devs   = decimal_points(8, 2);
  Grid const grid(0.5, 3);
  for (auto const &mech : {MechanismId::first_price(), MechanismId::second_price(),
                           MechanismId::reserve_price(2)})
  {
    SingleTaskRule const rule(mech);
    for (std::uint64_t seed = 0; seed < 8; ++seed)
    {
      auto const t = gen_random(3, 1, 40 + seed, 0.5, 2.5, 0.5).column(0);
      EXPECT_EQ(enumerate_equilibria(rule, t, grid).winner_set(),
                oracle::equilibrium_winners(oracle_rule(mech), t, points, devs))
          << mech.to_string() << " seed " << seed;
    }
  }
}

TEST(Enumerate, IndependentOfThreadCount)
{
  SingleTaskRule const spa(MechanismId::reserve_price(2));
  V const              t{0.7, 1.3, 1.1};
  Grid const           grid(0.1, 3);
  set_thread_count(1);
  auto const one = enumerate_equilibria(spa, t, grid);
  set_thread_count(3);
  auto const three = enumerate_equilibria(spa, t, grid);
  set_thread_count(0);
  EXPECT_TRUE(one.same_profiles(three));
  EXPECT_GT(one.size(), 0U);
}

TEST(Enumerate, RefusesOverBudget)
{
  SingleTaskRule const sp(MechanismId::second_price());
  try
  {
    enumerate_equilibria(sp, V{1, 2, 3}, Grid(0.01, 10));
    FAIL() << "expected BudgetExceeded";
  }
  catch (BudgetExceeded const &e)
  {
    EXPECT_EQ(e.budget(), kDefaultBudget);
    EXPECT_GT(e.requested(), e.budget());
  }
  EXPECT_THROW(enumerate_equilibria(sp, V{1, 2}, Grid(0.1, 4), 100), BudgetExceeded);
}

TEST(AchievableWinners, Examples)
{
  auto const spa = MechanismId::reserve_price(2);
  EXPECT_EQ(achievable_winners(spa, V{1, 1.9, 5}), (WinnerSet{0, 1}));
  EXPECT_EQ(achievable_winners(spa, V{1, 2, 1.5}), (WinnerSet{0, 1, 2}));
  EXPECT_EQ(achievable_winners(MechanismId::first_price(), V{1, 1, 3}), (WinnerSet{0, 1}));
  EXPECT_EQ(achievable_winners(MechanismId::reserve_price(1), V{1, 1.5}), (WinnerSet{0}));
  EXPECT_EQ(achievable_winners(MechanismId::second_price(), V{3, 1}), (WinnerSet{0, 1}));
  EXPECT_THROW(achievable_winners(MechanismId::pay_load_greedy(), V{1, 2}), std::invalid_argument);
}

TEST(AchievableWinners, InstanceDropsSentinels)
{
  Instance const inst(Matrix({{1, 1e6}, {1e6, 1e6}, {2, 3}}));
  auto const     sets = achievable_winners(MechanismId::second_price(), inst);
  EXPECT_EQ(sets[0], (WinnerSet{0, 2}));
  EXPECT_EQ(sets[1], (WinnerSet{2}));
}

TEST(AchievableWinners, GridEnumerationAgreesOnRandomVectors)
{
  for (double alpha : {1.5, 2.0, 3.0})
  {
    auto const           mech = MechanismId::reserve_price(alpha);
    SingleTaskRule const rule(mech);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
      auto const t    = gen_random(3, 1, 900 + seed, 0.1, 2, 0.1).column(0);
      Grid const grid = Grid::covering(0.1, *std::max_element(t.begin(), t.end()), alpha);
      EXPECT_EQ(enumerate_equilibria(rule, t, grid).winner_set(), oracle::bucket(alpha, t))
          << "alpha " << alpha << " seed " << seed;
    }
  }
}

TEST(Template, Examples)
{
  auto const case1 = equilibrium_template_spa(2, V{1, 1.9, 5}, 1, 0.1);
  EXPECT_EQ(case1, (V{1.9, 1, 1.9}));
  auto const r1 = spa_rule(2, case1);
  EXPECT_EQ(r1.winner, 1U);
  EXPECT_EQ(r1.pay[1], 1.9);

  auto const case2 = equilibrium_template_spa(2, V{1, 1, 5}, 0, 0.5);
  EXPECT_EQ(case2, (V{1, 1.5, 1.5}));
  EXPECT_EQ(spa_rule(2, case2).pay[0] - 1, 0.5);

  EXPECT_THROW(equilibrium_template_spa(2, V{1, 3, 5}, 1, 0.1), std::invalid_argument);
  EXPECT_THROW(equilibrium_template_spa(2, V{1, 1, 5}, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(equilibrium_template_spa(1, V{1, 1, 5}, 0, 0.1), std::invalid_argument);
}

TEST(Template, PassesVerification)
{
  for (double alpha : {1.5, 2.0, 3.0})
  {
    SingleTaskRule const rule(MechanismId::reserve_price(alpha));
    for (std::uint64_t seed = 0; seed < 30; ++seed)
    {
      auto const t    = gen_random(4, 1, seed, 1, 4, 0.1).column(0);
      Grid const grid = Grid::covering(0.1, *std::max_element(t.begin(), t.end()), alpha);
      for (std::size_t target : oracle::bucket(alpha, t))
      {
        auto const bids = equilibrium_template_spa(alpha, t, target, 0.1);
        EXPECT_TRUE(verify_equilibrium(rule, t, bids, grid));
        EXPECT_EQ(rule.run(bids).winner, target);
      }
    }
  }
}

TEST(WholeMechanism, ProductCompositionForReservePrice)
{
  auto const mech = MechanismId::reserve_price(2);
  SingleTaskRule const rule(mech);
  Grid const           grid(0.5, 3);
  for (std::uint64_t seed = 0; seed < 3; ++seed)
  {
    auto const inst  = gen_random(2, 2, 70 + seed, 0.5, 2, 0.5);
    auto const joint = enumerate_profile_equilibria(mech, inst, grid);

    std::set<std::vector<double>> from_joint;
    for (auto const &eq : joint)
    {
      auto const &s = eq.profile;
      from_joint.insert({s(0, 0), s(1, 0), s(0, 1), s(1, 1)});
      EXPECT_TRUE(verify_profile(mech, inst, s, grid));
    }
    auto const t0 = enumerate_equilibria(rule, inst.column(0), grid);
    auto const t1 = enumerate_equilibria(rule, inst.column(1), grid);
    std::set<std::vector<double>> product;
    for (std::size_t a = 0; a < t0.size(); ++a)
    {
      for (std::size_t b = 0; b < t1.size(); ++b)
      {
        auto const x = t0.bids(a);
        auto const y = t1.bids(b);
        product.insert({x[0], x[1], y[0], y[1]});
      }
    }
    EXPECT_EQ(from_joint, product) << "seed " << seed;
    EXPECT_FALSE(product.empty());
  }
}

TEST(WholeMechanism, VerifyProfileReportsDeviation)
{
  auto const     mech = MechanismId::first_price();
  Instance const inst(Matrix({{1, 1}, {2, 2}}));
  auto const     res = verify_profile(mech, inst, StrategyProfile(Matrix({{0.5, 0.5}, {2, 2}})),
                                      Grid(0.5, 3));
  ASSERT_FALSE(res.equilibrium);
  ASSERT_TRUE(res.deviation.has_value());
  EXPECT_EQ(res.deviation->machine, 0U);
  EXPECT_GT(res.deviation->utility_after, res.deviation->utility_before);
}

TEST(WholeMechanism, GreedyEquilibriaExistOnSmallInstance)
{
  Instance const inst(Matrix({{1, 2}, {2, 1}}));
  auto const     found = enumerate_profile_equilibria(MechanismId::pay_load_greedy(), inst, Grid(0.5, 2.5));
  ASSERT_FALSE(found.empty());
  for (auto const &eq : found)
  {
    EXPECT_TRUE(verify_profile(MechanismId::pay_load_greedy(), inst, eq.profile, Grid(0.5, 2.5)));
  }
}
