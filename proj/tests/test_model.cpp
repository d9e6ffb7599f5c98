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
#include "mechfront/model.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace mechfront;

namespace {

StrategyProfile column_profile(std::vector<double> const &bids)
{
  Matrix s(bids.size(), 1);
  s.set_column(0, bids);
  return StrategyProfile(s);
}

}  // namespace

TEST(Matrix, RowsColumnsAndRoundTrip)
{
  Matrix const a({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(a.rows(), 2U);
  EXPECT_EQ(a.cols(), 3U);
  EXPECT_EQ(a(1, 2), 6);
  EXPECT_EQ(a.column(1), (std::vector<double>{2, 5}));
  EXPECT_EQ(Matrix(a.to_rows()), a);
  EXPECT_THROW(Matrix({{1, 2}, {3}}), std::invalid_argument);
}

TEST(Instance, RejectsNegativeAndNonFinite)
{
  EXPECT_THROW(Instance(Matrix({{1, -1}})), std::invalid_argument);
  EXPECT_THROW(Instance(Matrix({{1, std::numeric_limits<double>::infinity()}})),
               std::invalid_argument);
}

TEST(Instance, BigMustDominate)
{
  // 2 (n + m) max = 2 * 3 * 10 = 60.
  EXPECT_NO_THROW(Instance(Matrix({{10, 1}}), 61));
  EXPECT_THROW(Instance(Matrix({{10, 1}}), 60), std::invalid_argument);
  Instance const inst(Matrix({{1, 1e6}, {2, 3}}));
  EXPECT_TRUE(inst.is_sentinel(1e6));
  EXPECT_EQ(inst.max_finite(), 3);
}

TEST(Instance, DefaultBigGrowsByPowersOfTen)
{
  EXPECT_EQ(Instance::default_big_for(Matrix({{1, 2}})), 1e6);
  EXPECT_EQ(Instance::default_big_for(Matrix({{3e5, 2}})), 1e7);
  EXPECT_EQ(Instance::default_big_for(Matrix({{1e6, 2}})), 1e6);  // 1e6 is already a sentinel
}

TEST(MechanismId, ParseAndPrint)
{
  EXPECT_EQ(MechanismId::parse("fp"), MechanismId::first_price());
  EXPECT_EQ(MechanismId::parse("sp"), MechanismId::second_price());
  EXPECT_EQ(MechanismId::parse("greedy"), MechanismId::pay_load_greedy());
  auto const spa = MechanismId::parse("spa:1.5");
  EXPECT_EQ(spa.kind, MechanismKind::kReservePrice);
  EXPECT_EQ(spa.alpha, 1.5);
  EXPECT_EQ(spa.to_string(), "spa:1.5");
  EXPECT_EQ(MechanismId::parse(spa.to_string()), spa);
  EXPECT_THROW(MechanismId::parse("spa:0.5"), std::invalid_argument);
  EXPECT_THROW(MechanismId::parse("spa:"), std::invalid_argument);
  EXPECT_THROW(MechanismId::parse("vickrey"), std::invalid_argument);
  EXPECT_FALSE(MechanismId::pay_load_greedy().task_independent());
}

TEST(Apply, SingleTaskExamples)
{
  auto const s = column_profile({1, 0.5, 2});
  auto const fp = apply(MechanismId::first_price(), s);
  EXPECT_EQ(fp.winner, (std::vector<std::size_t>{1}));
  EXPECT_EQ(fp.payments, (std::vector<double>{0, 0.5, 0}));
  auto const sp = apply(MechanismId::second_price(), s);
  EXPECT_EQ(sp.winner, (std::vector<std::size_t>{1}));
  EXPECT_EQ(sp.payments, (std::vector<double>{0, 1, 0}));
  auto const spa = apply(MechanismId::reserve_price(2), column_profile({1, 1.5, 3}));
  EXPECT_EQ(spa.winner, (std::vector<std::size_t>{0}));
  EXPECT_EQ(spa.payments, (std::vector<double>{1.5, 0, 0}));
}

TEST(Apply, PaymentsSumOverTasks)
{
  StrategyProfile const s(Matrix({{1, 3}, {2, 1}}));
  auto const            out = apply(MechanismId::second_price(), s);
  EXPECT_EQ(out.winner, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(out.payments, (std::vector<double>{2, 3}));
}

TEST(Utility, Examples)
{
  Instance const one(Matrix({{2}}));
  EXPECT_EQ(utility(MechanismId::first_price(), one, StrategyProfile(Matrix({{2}})), 0), 0);

  double const   eps = 0.1;
  Instance const t(Matrix({{0}, {eps}}));
  EXPECT_DOUBLE_EQ(utility(MechanismId::second_price(), t, column_profile({1, 0}), 1), 1 - eps);

  Instance const t2(Matrix({{1}, {5}}));
  EXPECT_EQ(utility(MechanismId::reserve_price(2), t2, column_profile({1, 5}), 0), 1);
  EXPECT_THROW(utility(MechanismId::first_price(), t2, column_profile({1, 5}), 2),
               std::out_of_range);
}

TEST(Makespan, Examples)
{
  Instance const           ones(Matrix(3, 9, 1.0));
  std::vector<std::size_t> all_first(9, 0);
  EXPECT_EQ(makespan(ones, all_first), 9);
  EXPECT_EQ(loads(ones, all_first), (std::vector<double>{9, 0, 0}));

  std::vector<std::size_t> spread{0, 1, 2, 0, 1, 2, 0, 1, 2};
  EXPECT_EQ(makespan(ones, spread), 3);
  EXPECT_THROW(makespan(ones, std::vector<std::size_t>{0}), std::invalid_argument);
}

TEST(Properties, OneWinnerNonnegativePaymentsSpAboveFp)
{
  StrategyProfile const s(Matrix({{0.5, 2, 1}, {0.5, 1, 3}, {4, 1, 0}}));
  auto const            fp = apply(MechanismId::first_price(), s);
  auto const            sp = apply(MechanismId::second_price(), s);
  ASSERT_EQ(fp.winner, sp.winner);
  double fp_total = 0;
  double sp_total = 0;
  for (std::size_t i = 0; i < 3; ++i)
  {
    EXPECT_GE(fp.payments[i], 0);
    EXPECT_GE(sp.payments[i], fp.payments[i]);
    fp_total += fp.payments[i];
    sp_total += sp.payments[i];
  }
  EXPECT_EQ(fp_total, 0.5 + 1 + 0);
  EXPECT_EQ(sp_total, 0.5 + 1 + 1);
}
