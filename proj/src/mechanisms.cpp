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

#include "mechfront/mechanisms.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mechfront {

std::size_t lowest_bidder(std::span<double const> bids)
{
  if (bids.empty())
  {
    throw std::invalid_argument("empty bid vector");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < bids.size(); ++i)
  {
    if (bids[i] < bids[best])
    {
      best = i;
    }
  }
  return best;
}

namespace {

double lowest_other(std::span<double const> bids, std::size_t winner)
{
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < bids.size(); ++i)
  {
    if (i != winner && bids[i] < best)
    {
      best = bids[i];
    }
  }
  return best;
}

void check_sizes(std::span<double const> bids, std::span<double> pay)
{
  if (pay.size() != bids.size())
  {
    throw std::invalid_argument("payment buffer size does not match bid vector");
  }
}

}  // namespace

std::size_t fp_rule_into(std::span<double const> bids, std::span<double> pay)
{
  check_sizes(bids, pay);
  std::size_t const w = lowest_bidder(bids);
  std::fill(pay.begin(), pay.end(), 0.0);
  pay[w] = bids[w];
  return w;
}

std::size_t sp_rule_into(std::span<double const> bids, std::span<double> pay)
{
  check_sizes(bids, pay);
  if (bids.size() < 2)
  {
    throw std::invalid_argument("second price needs at least two machines");
  }
  std::size_t const w = lowest_bidder(bids);
  std::fill(pay.begin(), pay.end(), 0.0);
  pay[w] = lowest_other(bids, w);
  return w;
}

std::size_t spa_rule_into(double alpha, std::span<double const> bids, std::span<double> pay)
{
  check_sizes(bids, pay);
  if (!(alpha >= 1.0))
  {
    throw std::invalid_argument("reserve factor alpha must be >= 1");
  }
  if (bids.size() < 2)
  {
    throw std::invalid_argument("reserve-price rule needs at least two machines");
  }
  // The reserve-setting machine and the winner are the same lowest-index
  // argmin; any tied choice yields the same reserve.
  std::size_t const w       = lowest_bidder(bids);
  double const      reserve = alpha * bids[w];
  std::fill(pay.begin(), pay.end(), 0.0);
  pay[w] = std::min(lowest_other(bids, w), reserve);
  return w;
}

TaskResult fp_rule(std::span<double const> bids)
{
  TaskResult r{0, std::vector<double>(bids.size())};
  r.winner = fp_rule_into(bids, r.pay);
  return r;
}

TaskResult sp_rule(std::span<double const> bids)
{
  TaskResult r{0, std::vector<double>(bids.size())};
  r.winner = sp_rule_into(bids, r.pay);
  return r;
}

TaskResult spa_rule(double alpha, std::span<double const> bids)
{
  TaskResult r{0, std::vector<double>(bids.size())};
  r.winner = spa_rule_into(alpha, bids, r.pay);
  return r;
}

Outcome payload_greedy(StrategyProfile const &reports)
{
  std::size_t const n = reports.n();
  if (n == 0)
  {
    throw std::invalid_argument("payload_greedy: no machines");
  }
  Outcome out;
  out.winner.resize(reports.m());
  out.payments.assign(n, 0.0);
  for (std::size_t j = 0; j < reports.m(); ++j)
  {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
    {
      if (out.payments[i] + reports(i, j) < out.payments[best] + reports(best, j))
      {
        best = i;
      }
    }
    out.winner[j] = best;
    out.payments[best] += reports(best, j);
  }
  return out;
}

SingleTaskRule::SingleTaskRule(MechanismId mech)
  : mech_(mech)
  , name_(mech.to_string())
{
  if (!mech.task_independent())
  {
    throw std::invalid_argument("mechanism " + name_ + " is not task-independent");
  }
  if (mech.kind == MechanismKind::kReservePrice && !(mech.alpha >= 1.0))
  {
    throw std::invalid_argument("reserve factor alpha must be >= 1");
  }
}

SingleTaskRule SingleTaskRule::custom(std::string name, Fn fn)
{
  SingleTaskRule r;
  r.custom_ = std::move(fn);
  r.name_   = std::move(name);
  return r;
}

std::size_t SingleTaskRule::min_machines() const noexcept
{
  if (custom_)
  {
    return 1;
  }
  return mech_.kind == MechanismKind::kFirstPrice ? 1 : 2;
}

std::size_t SingleTaskRule::run(std::span<double const> bids, std::span<double> pay) const
{
  if (custom_)
  {
    return custom_(bids, pay);
  }
  switch (mech_.kind)
  {
  case MechanismKind::kFirstPrice:
    return fp_rule_into(bids, pay);
  case MechanismKind::kSecondPrice:
    return sp_rule_into(bids, pay);
  case MechanismKind::kReservePrice:
    return spa_rule_into(mech_.alpha, bids, pay);
  case MechanismKind::kPayLoadGreedy:
    break;
  }
  throw std::invalid_argument("unsupported single-task rule");
}

TaskResult SingleTaskRule::run(std::span<double const> bids) const
{
  TaskResult r{0, std::vector<double>(bids.size())};
  r.winner = run(bids, r.pay);
  return r;
}

}  // namespace mechfront
