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

// Pure Nash equilibria of scheduling mechanisms.
//
// Grid semantics: a profile on the grid is certified when no machine gains by
// a unilateral deviation to any grid point or to the withdraw bid one step
// above the cap (the latter only with two or more machines). For FP, SP and
// SP_alpha the utility of a deviation is piecewise monotone between opponent
// bids, and every opponent bid and its +-step neighbours are grid points.
//
// Two enumeration routes are provided: the table kernel (best responses
// precomputed per opponent profile, OpenMP-parallel) and a serial reference
// that runs verify_equilibrium on every profile. Both return profiles in
// lexicographic order of grid indices, machine 0 most significant, and the
// result does not depend on the thread count.

#include "mechfront/grid.hpp"
#include "mechfront/mechanisms.hpp"
#include "mechfront/model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mechfront {

inline constexpr double kDefaultBudget = 1e7;

struct Deviation
{
  std::size_t machine{0};
  double      bid{0.0};
  double      utility_before{0.0};
  double      utility_after{0.0};
};

struct VerifyResult
{
  bool                     equilibrium{false};
  std::optional<Deviation> deviation;  ///< best improving response of the first unstable machine
  std::size_t              checked_deviations{0};

  explicit operator bool() const noexcept
  {
    return equilibrium;
  }
};

/// Checks a single-task bid vector against all grid deviations. Bids must be
/// grid points; true times are unrestricted.
VerifyResult verify_equilibrium(SingleTaskRule const &rule, std::span<double const> true_times,
                                std::span<double const> bids, Grid const &grid);

struct EquilibriumCertificate
{
  enum class Scope
  {
    kGrid,
    kAnalytic
  };

  std::vector<double> bids;
  Scope               scope{Scope::kGrid};
  std::size_t         winner{0};
  std::size_t         checked_deviations{0};
};

/// Grid equilibria of one task, stored compactly as grid indices.
class EquilibriumSet
{
public:
  EquilibriumSet(std::size_t n, Grid grid)
    : n_(n)
    , grid_(grid)
  {}

  std::size_t size() const noexcept
  {
    return winners_.size();
  }
  bool empty() const noexcept
  {
    return winners_.empty();
  }
  std::size_t machines() const noexcept
  {
    return n_;
  }
  Grid const &grid() const noexcept
  {
    return grid_;
  }

  std::vector<double> bids(std::size_t k) const;
  std::span<std::uint32_t const> indices(std::size_t k) const
  {
    return {indices_.data() + k * n_, n_};
  }
  std::size_t winner(std::size_t k) const
  {
    return winners_[k];
  }
  EquilibriumCertificate certificate(std::size_t k) const;

  /// Sorted distinct winners over all certificates.
  std::vector<std::size_t> winner_set() const;

  double profiles_evaluated() const noexcept
  {
    return profiles_evaluated_;
  }

  void add(std::span<std::uint32_t const> idx, std::size_t winner);
  void set_profiles_evaluated(double v) noexcept
  {
    profiles_evaluated_ = v;
  }

  /// Equality of the certified profiles (not of the bookkeeping counters).
  bool same_profiles(EquilibriumSet const &other) const noexcept
  {
    return n_ == other.n_ && grid_ == other.grid_ && indices_ == other.indices_ &&
           winners_ == other.winners_;
  }

private:
  std::size_t                n_;
  Grid                       grid_;
  std::vector<std::uint32_t> indices_;
  std::vector<std::size_t>   winners_;
  double                     profiles_evaluated_{0};
};

/// All grid equilibria of one task (table kernel, parallel). Throws
/// BudgetExceeded when |grid|^n exceeds `budget`.
EquilibriumSet enumerate_equilibria(SingleTaskRule const &rule, std::span<double const> true_times,
                                    Grid const &grid, double budget = kDefaultBudget);

/// Serial reference: verify_equilibrium on every profile.
EquilibriumSet enumerate_equilibria_reference(SingleTaskRule const &rule,
                                              std::span<double const> true_times, Grid const &grid,
                                              double budget = kDefaultBudget);

using WinnerSet  = std::vector<std::size_t>;
using WinnerSets = std::vector<WinnerSet>;

/// Analytic achievable equilibrium winners of one task: FP the true-fastest
/// machines, SP every machine, SP_alpha (alpha > 1) the bucket
/// {i : t_i <= alpha min t}. SP_1 is routed to FP.
WinnerSet achievable_winners(MechanismId const &mech, std::span<double const> true_times);
/// Per task; sentinel machines are excluded unless every machine is one.
WinnerSets achievable_winners(MechanismId const &mech, Instance const &inst);

/// Constructive SP_alpha equilibrium in which `target` wins: target bids the
/// fastest time t_f; the others bid t_target when t_target > t_f and
/// t_f + eps otherwise (requires t_f + eps < alpha t_f).
std::vector<double> equilibrium_template_spa(double alpha, std::span<double const> true_times,
                                             std::size_t target, double eps);

// Whole-mechanism equilibria. Each machine deviates jointly over all tasks
// (grid points plus the withdraw bid per task); this applies to mechanisms
// that are not task-independent.

struct ProfileDeviation
{
  std::size_t         machine{0};
  std::vector<double> bids;
  double              utility_before{0.0};
  double              utility_after{0.0};
};

struct ProfileVerifyResult
{
  bool                            equilibrium{false};
  std::optional<ProfileDeviation> deviation;
  double                          checked_deviations{0};

  explicit operator bool() const noexcept
  {
    return equilibrium;
  }
};

ProfileVerifyResult verify_profile(MechanismId const &mech, Instance const &inst,
                                   StrategyProfile const &profile, Grid const &grid,
                                   double budget = kDefaultBudget);

struct ProfileEquilibrium
{
  StrategyProfile profile;
  Outcome         outcome;
};

/// All grid profiles of the whole mechanism that survive joint deviations.
/// The cost counted against `budget` is every evaluated report matrix.
std::vector<ProfileEquilibrium> enumerate_profile_equilibria(MechanismId const &mech,
                                                             Instance const &inst, Grid const &grid,
                                                             double budget = kDefaultBudget);

}  // namespace mechfront
