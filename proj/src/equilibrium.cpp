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

#include "game_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace mechfront {

namespace {

double task_utility(std::span<double const> pay, std::size_t winner,
                    std::span<double const> true_times, std::size_t k)
{
  return pay[k] - (k == winner ? true_times[k] : 0.0);
}

/// Bid values a machine may deviate to for one task: every grid point, then
/// the withdraw bid when there is someone to lose to.
std::vector<double> deviation_values(Grid const &grid, std::size_t n)
{
  auto values = grid.points();
  if (n >= 2)
  {
    values.push_back(grid.withdraw_bid());
  }
  return values;
}

std::string budget_message(char const *what, double requested, double budget)
{
  char buf[200];
  std::snprintf(buf, sizeof buf, "%s: %.4g evaluations exceed the budget of %.4g", what,
                requested, budget);
  return buf;
}

void check_rule_size(SingleTaskRule const &rule, std::size_t n)
{
  if (n < rule.min_machines())
  {
    throw std::invalid_argument("rule " + rule.name() + " needs at least " +
                                std::to_string(rule.min_machines()) + " machines");
  }
}

struct TaskEval
{
  SingleTaskRule const      *rule;
  std::span<double const>    true_times;
  std::vector<double> const *values;
  std::vector<double>        bids;
  std::vector<double>        pay;

  void operator()(std::span<std::uint32_t const> codes, std::span<double> u)
  {
    for (std::size_t k = 0; k < codes.size(); ++k)
    {
      bids[k] = (*values)[codes[k]];
    }
    std::size_t const w = rule->run(bids, pay);
    for (std::size_t k = 0; k < codes.size(); ++k)
    {
      u[k] = task_utility(pay, w, true_times, k);
    }
  }
};

}  // namespace

VerifyResult verify_equilibrium(SingleTaskRule const &rule, std::span<double const> true_times,
                                std::span<double const> bids, Grid const &grid)
{
  std::size_t const n = bids.size();
  if (true_times.size() != n)
  {
    throw std::invalid_argument("verify_equilibrium: true times and bids differ in length");
  }
  check_rule_size(rule, n);

  std::vector<double> current(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    auto idx = grid.index_of(bids[k]);
    if (!idx)
    {
      throw std::invalid_argument("verify_equilibrium: bid " + std::to_string(bids[k]) +
                                  " is not a grid point");
    }
    current[k] = grid.point(*idx);
  }

  auto const          values = deviation_values(grid, n);
  std::vector<double> pay(n);
  std::size_t const   w0 = rule.run(current, pay);
  std::vector<double> base(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    base[k] = task_utility(pay, w0, true_times, k);
  }

  VerifyResult        out;
  out.equilibrium = true;
  std::vector<double> trial(current);
  for (std::size_t i = 0; i < n; ++i)
  {
    double best_u   = base[i];
    double best_bid = current[i];
    for (double v : values)
    {
      trial[i]            = v;
      std::size_t const w = rule.run(trial, pay);
      double const      u = task_utility(pay, w, true_times, i);
      ++out.checked_deviations;
      if (u > best_u)
      {
        best_u   = u;
        best_bid = v;
      }
    }
    trial[i] = current[i];
    if (best_u > base[i] && out.equilibrium)
    {
      out.equilibrium = false;
      out.deviation   = Deviation{i, best_bid, base[i], best_u};
    }
  }
  return out;
}

std::vector<double> EquilibriumSet::bids(std::size_t k) const
{
  std::vector<double> out(n_);
  auto                idx = indices(k);
  for (std::size_t i = 0; i < n_; ++i)
  {
    out[i] = grid_.point(idx[i]);
  }
  return out;
}

EquilibriumCertificate EquilibriumSet::certificate(std::size_t k) const
{
  EquilibriumCertificate cert;
  cert.bids               = bids(k);
  cert.scope              = EquilibriumCertificate::Scope::kGrid;
  cert.winner             = winners_[k];
  cert.checked_deviations = n_ * (grid_.size() + (n_ >= 2 ? 1 : 0));
  return cert;
}

std::vector<std::size_t> EquilibriumSet::winner_set() const
{
  std::vector<std::size_t> out(winners_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void EquilibriumSet::add(std::span<std::uint32_t const> idx, std::size_t winner)
{
  indices_.insert(indices_.end(), idx.begin(), idx.end());
  winners_.push_back(winner);
}

EquilibriumSet enumerate_equilibria(SingleTaskRule const &rule, std::span<double const> true_times,
                                    Grid const &grid, double budget)
{
  std::size_t const n = true_times.size();
  if (n == 0)
  {
    throw std::invalid_argument("enumerate_equilibria: no machines");
  }
  check_rule_size(rule, n);
  auto const             values = deviation_values(grid, n);
  detail::GameShape const shape{n, grid.size(), values.size()};
  double const           profiles = detail::game_profiles(shape);
  if (profiles > budget)
  {
    throw BudgetExceeded(budget_message("enumerate_equilibria", profiles, budget), profiles,
                         budget);
  }

  TaskEval const eval{&rule, true_times, &values, std::vector<double>(n), std::vector<double>(n)};
  auto const     found = detail::enumerate_game(shape, eval);

  EquilibriumSet      set(n, grid);
  std::vector<double> bids(n);
  std::vector<double> pay(n);
  for (std::size_t off = 0; off < found.codes.size(); off += n)
  {
    std::span<std::uint32_t const> idx(found.codes.data() + off, n);
    for (std::size_t k = 0; k < n; ++k)
    {
      bids[k] = grid.point(idx[k]);
    }
    set.add(idx, rule.run(bids, pay));
  }
  set.set_profiles_evaluated(profiles);
  return set;
}

EquilibriumSet enumerate_equilibria_reference(SingleTaskRule const &rule,
                                              std::span<double const> true_times, Grid const &grid,
                                              double budget)
{
  std::size_t const n = true_times.size();
  if (n == 0)
  {
    throw std::invalid_argument("enumerate_equilibria_reference: no machines");
  }
  check_rule_size(rule, n);
  double profiles = 1.0;
  for (std::size_t k = 0; k < n; ++k)
  {
    profiles *= static_cast<double>(grid.size());
  }
  if (profiles > budget)
  {
    throw BudgetExceeded(budget_message("enumerate_equilibria_reference", profiles, budget),
                         profiles, budget);
  }

  EquilibriumSet             set(n, grid);
  std::vector<std::uint32_t> idx(n, 0);
  std::vector<double>        bids(n, grid.point(0));
  std::vector<double>        pay(n);
  for (;;)
  {
    if (verify_equilibrium(rule, true_times, bids, grid))
    {
      set.add(idx, rule.run(bids, pay));
    }
    std::size_t pos = n;
    while (pos-- > 0)
    {
      if (++idx[pos] < grid.size())
      {
        bids[pos] = grid.point(idx[pos]);
        break;
      }
      idx[pos]  = 0;
      bids[pos] = grid.point(0);
    }
    if (pos == static_cast<std::size_t>(-1))
    {
      break;
    }
  }
  set.set_profiles_evaluated(profiles);
  return set;
}

WinnerSet achievable_winners(MechanismId const &mech, std::span<double const> true_times)
{
  if (true_times.empty())
  {
    throw std::invalid_argument("achievable_winners: no machines");
  }
  std::size_t const n = true_times.size();
  WinnerSet         out;
  double const      fastest = *std::min_element(true_times.begin(), true_times.end());
  switch (mech.kind)
  {
  case MechanismKind::kSecondPrice:
    for (std::size_t i = 0; i < n; ++i)
    {
      out.push_back(i);
    }
    return out;
  case MechanismKind::kReservePrice:
    if (mech.alpha > 1.0)
    {
      double const limit = mech.alpha * fastest;
      for (std::size_t i = 0; i < n; ++i)
      {
        if (true_times[i] <= limit)
        {
          out.push_back(i);
        }
      }
      return out;
    }
    [[fallthrough]];
  case MechanismKind::kFirstPrice:
    for (std::size_t i = 0; i < n; ++i)
    {
      if (true_times[i] == fastest)
      {
        out.push_back(i);
      }
    }
    return out;
  case MechanismKind::kPayLoadGreedy:
    break;
  }
  throw std::invalid_argument("achievable_winners: no analytic characterisation for " +
                              mech.to_string());
}

WinnerSets achievable_winners(MechanismId const &mech, Instance const &inst)
{
  WinnerSets out(inst.m());
  for (std::size_t j = 0; j < inst.m(); ++j)
  {
    out[j] = achievable_winners(mech, inst.column(j));
    // A sentinel machine can only win against reports above big, so it is
    // dropped whenever some finite machine remains.
    WinnerSet finite;
    for (std::size_t i : out[j])
    {
      if (!inst.is_sentinel(inst(i, j)))
      {
        finite.push_back(i);
      }
    }
    if (!finite.empty())
    {
      out[j] = std::move(finite);
    }
  }
  return out;
}

std::vector<double> equilibrium_template_spa(double alpha, std::span<double const> true_times,
                                             std::size_t target, double eps)
{
  if (!(alpha > 1.0))
  {
    throw std::invalid_argument("equilibrium_template_spa: alpha must exceed 1");
  }
  if (true_times.size() < 2)
  {
    throw std::invalid_argument("equilibrium_template_spa: needs at least two machines");
  }
  if (target >= true_times.size())
  {
    throw std::out_of_range("equilibrium_template_spa: target out of range");
  }
  double const fastest = *std::min_element(true_times.begin(), true_times.end());
  double const own     = true_times[target];
  if (own > alpha * fastest)
  {
    throw std::invalid_argument("equilibrium_template_spa: target is outside the bucket");
  }

  std::vector<double> bids(true_times.size());
  if (own > fastest)
  {
    std::fill(bids.begin(), bids.end(), own);
  }
  else
  {
    if (!(eps > 0.0) || !(fastest + eps < alpha * fastest))
    {
      throw std::invalid_argument(
          "equilibrium_template_spa: need 0 < eps with t_f + eps < alpha t_f");
    }
    std::fill(bids.begin(), bids.end(), fastest + eps);
  }
  // The target's bid is strictly below every other bid, so the lowest-index
  // tie-break never decides the winner here.
  bids[target] = fastest;
  return bids;
}

namespace {

struct JointSpace
{
  std::size_t                      grid_cells{0};
  std::vector<std::vector<double>> values;  ///< strategies first, then withdraw-containing rows
  std::size_t                      strategies{0};
};

JointSpace joint_space(Grid const &grid, std::size_t n, std::size_t m, double budget)
{
  JointSpace        space;
  std::size_t const g    = grid.size();
  std::size_t const base = g + (n >= 2 ? 1 : 0);
  double            dcount = 1.0;
  for (std::size_t j = 0; j < m; ++j)
  {
    dcount *= static_cast<double>(base);
  }
  if (dcount > budget)
  {
    throw BudgetExceeded(budget_message("joint deviation space", dcount, budget), dcount, budget);
  }
  auto const dev = deviation_values(grid, n);

  auto fill = [&](std::size_t radix, bool want_withdraw) {
    std::vector<std::size_t> digit(m, 0);
    for (;;)
    {
      bool const has_withdraw =
          std::any_of(digit.begin(), digit.end(), [&](std::size_t x) { return x == g; });
      if (has_withdraw == want_withdraw)
      {
        std::vector<double> row(m);
        for (std::size_t j = 0; j < m; ++j)
        {
          row[j] = dev[digit[j]];
        }
        space.values.push_back(std::move(row));
      }
      std::size_t pos = m;
      while (pos-- > 0)
      {
        if (++digit[pos] < radix)
        {
          break;
        }
        digit[pos] = 0;
      }
      if (pos == static_cast<std::size_t>(-1))
      {
        break;
      }
    }
  };
  fill(g, false);
  space.strategies = space.values.size();
  if (base > g)
  {
    fill(base, true);
  }
  return space;
}

struct JointEval
{
  MechanismId const *mech;
  Instance const    *inst;
  JointSpace const  *space;
  Matrix             reports;

  void operator()(std::span<std::uint32_t const> codes, std::span<double> u)
  {
    for (std::size_t i = 0; i < codes.size(); ++i)
    {
      auto const &row = space->values[codes[i]];
      for (std::size_t j = 0; j < row.size(); ++j)
      {
        reports(i, j) = row[j];
      }
    }
    Outcome const out = apply(*mech, StrategyProfile(reports));
    for (std::size_t i = 0; i < codes.size(); ++i)
    {
      u[i] = utility(*inst, out, i);
    }
  }
};

}  // namespace

ProfileVerifyResult verify_profile(MechanismId const &mech, Instance const &inst,
                                   StrategyProfile const &profile, Grid const &grid, double budget)
{
  std::size_t const n = inst.n();
  std::size_t const m = inst.m();
  if (profile.n() != n || profile.m() != m)
  {
    throw std::invalid_argument("verify_profile: profile shape does not match instance");
  }
  Matrix current(n, m);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < m; ++j)
    {
      auto idx = grid.index_of(profile(i, j));
      if (!idx)
      {
        throw std::invalid_argument("verify_profile: report is not a grid point");
      }
      current(i, j) = grid.point(*idx);
    }
  }
  auto const space = joint_space(grid, n, m, budget / std::max<std::size_t>(n, 1));

  Outcome const       out0 = apply(mech, StrategyProfile(current));
  ProfileVerifyResult res;
  res.equilibrium = true;
  Matrix trial(current);
  for (std::size_t i = 0; i < n; ++i)
  {
    double const        base   = utility(inst, out0, i);
    double              best_u = base;
    std::vector<double> best_row;
    for (auto const &row : space.values)
    {
      for (std::size_t j = 0; j < m; ++j)
      {
        trial(i, j) = row[j];
      }
      double const u = utility(inst, apply(mech, StrategyProfile(trial)), i);
      res.checked_deviations += 1;
      if (u > best_u)
      {
        best_u   = u;
        best_row = row;
      }
    }
    for (std::size_t j = 0; j < m; ++j)
    {
      trial(i, j) = current(i, j);
    }
    if (best_u > base && res.equilibrium)
    {
      res.equilibrium = false;
      res.deviation   = ProfileDeviation{i, best_row, base, best_u};
    }
  }
  return res;
}

std::vector<ProfileEquilibrium> enumerate_profile_equilibria(MechanismId const &mech,
                                                             Instance const &inst, Grid const &grid,
                                                             double budget)
{
  std::size_t const n     = inst.n();
  std::size_t const m     = inst.m();
  auto const        space = joint_space(grid, n, m, budget);
  detail::GameShape const shape{n, space.strategies, space.values.size()};
  double const            cost = detail::game_cost(shape);
  if (cost > budget)
  {
    throw BudgetExceeded(budget_message("enumerate_profile_equilibria", cost, budget), cost,
                         budget);
  }
  JointEval const eval{&mech, &inst, &space, Matrix(n, m)};
  auto const      found = detail::enumerate_game(shape, eval);

  std::vector<ProfileEquilibrium> out;
  for (std::size_t off = 0; off < found.codes.size(); off += n)
  {
    Matrix reports(n, m);
    for (std::size_t i = 0; i < n; ++i)
    {
      auto const &row = space.values[found.codes[off + i]];
      for (std::size_t j = 0; j < m; ++j)
      {
        reports(i, j) = row[j];
      }
    }
    StrategyProfile profile(reports);
    Outcome         outcome = apply(mech, profile);
    out.push_back({std::move(profile), std::move(outcome)});
  }
  return out;
}

}  // namespace mechfront
