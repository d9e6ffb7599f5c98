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

// Inefficiency of equilibria, frontier sweeps over alpha, and the property
// checkers built on the equilibrium engine.
//
// Ratios are per-instance values. A supremum over instances is only ever
// approached from below by them.

#include "mechfront/equilibrium.hpp"
#include "mechfront/grid.hpp"
#include "mechfront/instance_lab.hpp"
#include "mechfront/mechanisms.hpp"
#include "mechfront/model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mechfront {

/// value / opt, with 0/0 = 1 and x/0 = inf for x > 0.
double inefficiency_ratio(double value, double opt);

struct InefficiencyReport
{
  enum class Source
  {
    kAnalytic,  ///< winner sets from the equilibrium characterisation
    kGrid,      ///< equilibria enumerated on a grid
  };

  MechanismId              mechanism;
  Source                   source{Source::kAnalytic};
  double                   opt{0.0};
  double                   worst_makespan{0.0};
  double                   best_makespan{0.0};
  double                   poa_ratio{1.0};
  double                   pos_ratio{1.0};
  std::vector<std::size_t> opt_witness;
  std::vector<std::size_t> worst_witness;
  std::vector<std::size_t> best_witness;
  WinnerSets               winners;  ///< per task; empty for the grid route of joint mechanisms
  std::size_t              equilibria{0};  ///< grid route only
};

/// Task-independent built-ins use the analytic winner sets. PayLoadGreedy
/// enumerates whole-mechanism grid equilibria on `grid` (default: step 0.1
/// covering the largest finite time) and throws when none exists.
InefficiencyReport inefficiency(MechanismId const &mech, Instance const &inst,
                                std::optional<Grid> grid = std::nullopt,
                                double budget = kDefaultBudget);

/// Same as inefficiency() for task-independent mechanisms, but with winner
/// sets taken from per-task grid enumeration.
InefficiencyReport inefficiency_grid(MechanismId const &mech, Instance const &inst,
                                     Grid const &grid, double budget = kDefaultBudget);

/// Per-task winner unions of grid enumeration.
WinnerSets grid_winner_sets(SingleTaskRule const &rule, Instance const &inst, Grid const &grid,
                            double budget = kDefaultBudget);

/// Default grid of the engine: step eps, cap alpha * max_finite + 2 eps.
Grid default_grid(Instance const &inst, double alpha = 1.0, double eps = 0.1);

double poa_bound(std::size_t n, double alpha);
double pos_bound(std::size_t n, double alpha);

struct FrontierPoint
{
  double      alpha{1.0};
  double      poa_bound{0.0};
  double      pos_bound{0.0};
  double      poa_emp{1.0};
  double      pos_emp{1.0};
  std::size_t poa_arg{0};  ///< suite index attaining poa_emp
  std::size_t pos_arg{0};
};

/// Default suite for n machines: hat, tilde, uniform and 20 seeded random
/// instances (n x 4, grid multiples of 0.1 in [0.1, 4]). Hat and tilde
/// without an alpha parameter take the sweep's alpha and are skipped at
/// alpha = 1.
std::vector<GeneratorSpec> default_frontier_suite(std::size_t n);

/// Per alpha (ascending, as given), the largest PoA and PoS ratio of SP_alpha
/// over the suite. Parallel over (alpha, instance) pairs.
std::vector<FrontierPoint> frontier_sweep(std::size_t n, std::vector<double> const &alphas,
                                          std::vector<GeneratorSpec> const &suite);

enum class Direction
{
  kForward,  ///< lower won tasks' times, raise lost tasks' times
  kReverse,  ///< the opposite; a negative control
};

struct MonotonicityResult
{
  bool                    passed{true};
  std::size_t             trials{0};
  std::size_t             failures{0};
  std::optional<Instance> counterexample;
};

/// Re-verifies `profile`, an equilibrium under `inst`, on `trials` modified
/// instances. Won times are scaled by a uniform factor in [0, 1); lost times
/// move uniformly towards the grid cap. Sentinel entries are left as they are.
MonotonicityResult monotonicity_check(MechanismId const &mech, Instance const &inst,
                                      StrategyProfile const &profile, Grid const &grid,
                                      std::size_t trials, std::uint64_t seed,
                                      Direction direction = Direction::kForward);

/// Equilibrium test of a whole profile. Task-independent mechanisms are
/// checked task by task, others by joint deviations.
bool is_equilibrium(MechanismId const &mech, Instance const &inst, StrategyProfile const &profile,
                    Grid const &grid, double budget = kDefaultBudget);

struct AnonymityViolation
{
  std::vector<double>      true_times;
  std::vector<std::size_t> permutation;  ///< machine i is relabelled permutation[i]
  std::size_t              winner{0};    ///< achievable under true_times
  WinnerSet                permuted_winners;
};

struct AnonymityResult
{
  bool                              passed{true};
  std::size_t                       checked{0};
  std::optional<AnonymityViolation> counterexample;
};

/// For every vector, permutation and achievable grid winner w, requires
/// permutation[w] to be achievable under the permuted vector. Vectors must
/// be tie-free.
AnonymityResult anonymity_check(SingleTaskRule const &rule,
                                std::vector<std::vector<double>> const &true_vectors,
                                Grid const &grid, double budget = kDefaultBudget);

struct ProbeMatrix
{
  Matrix a;  ///< a(i, j): largest k eps at which slow j can win against fast i
  double eps{0.1};
  double cap{0.0};
};

/// Largest slow-machine time at which the rule's winner can be forced to be
/// the slow machine: 1 for FP, alpha for SP_alpha, none for SP and custom
/// rules.
std::optional<double> probe_boundary(SingleTaskRule const &rule);

/// Grid for probing: step eps, cap the boundary (2 when there is none) plus
/// (n + 1) eps, rounded up to the grid.
Grid default_probe_grid(SingleTaskRule const &rule, std::size_t n, double eps);

/// For each ordered pair (fast i, slow j) ascends k and asks whether j wins
/// some grid equilibrium of gen_canonical(n, i, j, k eps). The search stops
/// after n consecutive failures past the boundary or at the grid cap.
ProbeMatrix probe_matrix(SingleTaskRule const &rule, std::size_t n, double eps,
                         std::optional<Grid> grid = std::nullopt,
                         double budget = kDefaultBudget);

/// (x + beta y) / max(x, gamma y) <= beta / gamma + 1, with a relative
/// rounding allowance of 1e-12.
bool check_tech1(double x, double y, double beta, double gamma);

struct CombiResult
{
  bool                     holds{false};
  std::size_t              row{0};
  std::vector<std::size_t> subset;
  double                   value{0.0};  ///< |I| / (max_{j in I} a(row, j) + eps)
  double                   bound{0.0};  ///< (n - 1) / (alpha sqrt 2)
};

/// Largest |I| / (max_{j in I} a(i, j) + eps) over rows i and nonempty
/// I excluding i, by exhaustive subset search. No premise checks.
CombiResult combi_max_ratio(Matrix const &a, double alpha, double eps);

/// Checks the premises (zero diagonal, positive off-diagonal, every column
/// sum below (n - 1) alpha / sqrt 2, 0 < eps <= alpha / ((n - 1) sqrt 2))
/// and throws PremiseViolation if one fails; then runs combi_max_ratio.
CombiResult check_combi(Matrix const &a, double alpha, double eps);

}  // namespace mechfront
