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
#pragma once

#include "mechfront/model.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mechfront {

struct TaskResult
{
  std::size_t         winner{0};
  std::vector<double> pay;

  bool operator==(TaskResult const &) const = default;
};

/// Lowest-index argmin of the bids.
std::size_t lowest_bidder(std::span<double const> bids);

// Single-task rules. The `_into` forms write the payment vector in place and
// return the winner; they back the enumeration hot loops.
std::size_t fp_rule_into(std::span<double const> bids, std::span<double> pay);
std::size_t sp_rule_into(std::span<double const> bids, std::span<double> pay);
std::size_t spa_rule_into(double alpha, std::span<double const> bids, std::span<double> pay);

/// First price: the lowest bidder wins and is paid its bid.
TaskResult fp_rule(std::span<double const> bids);
/// Second price: the lowest bidder wins and is paid the lowest other bid.
TaskResult sp_rule(std::span<double const> bids);
/// Second price with reserve alpha * (lowest bid).
TaskResult spa_rule(double alpha, std::span<double const> bids);

/// Greedy list scheduling on the reports (tasks in index order, each to the
/// machine with the smallest resulting reported load); every machine is paid
/// its reported load.
Outcome payload_greedy(StrategyProfile const &reports);

/// A single-task component mechanism. Built-ins dispatch on MechanismId;
/// custom rules wrap an arbitrary callable (used for test fixtures).
class SingleTaskRule
{
public:
  using Fn = std::function<std::size_t(std::span<double const>, std::span<double>)>;

  /// `mech` must be task-independent.
  explicit SingleTaskRule(MechanismId mech);
  static SingleTaskRule custom(std::string name, Fn fn);

  std::size_t run(std::span<double const> bids, std::span<double> pay) const;
  TaskResult  run(std::span<double const> bids) const;

  /// Machine count the rule accepts at minimum.
  std::size_t min_machines() const noexcept;

  std::string const &name() const noexcept
  {
    return name_;
  }
  /// Set for built-in rules.
  MechanismId const *mechanism() const noexcept
  {
    return custom_ ? nullptr : &mech_;
  }

private:
  SingleTaskRule() = default;

  MechanismId mech_{};
  Fn          custom_;
  std::string name_;
};

}  // namespace mechfront
