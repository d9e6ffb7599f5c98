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
#include "mechfront/analysis.hpp"

#include "mechfront/errors.hpp"
#include "mechfront/instance_io.hpp"
#include "mechfront/opt_solver.hpp"
#include "mechfront/random.hpp"

#include "game_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mechfront {

double inefficiency_ratio(double value, double opt)
{
  if (opt == 0.0)
  {
    return value == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return value / opt;
}

namespace {

EligibilityMask mask_of(std::size_t n, WinnerSets const &sets)
{
  return EligibilityMask(n, std::vector<std::vector<std::size_t>>(sets.begin(), sets.end()));
}

InefficiencyReport report_from_sets(MechanismId const &mech, Instance const &inst,
                                    WinnerSets sets, InefficiencyReport::Source source)
{
  InefficiencyReport rep;
  rep.mechanism = mech;
  rep.source    = source;
  auto const opt = opt_makespan(inst);
  rep.opt         = opt.value;
  rep.opt_witness = opt.assignment;

  auto const mask  = mask_of(inst.n(), sets);
  auto const worst = opt_makespan_masked(inst, mask, Objective::kMax);
  auto const best  = opt_makespan_masked(inst, mask, Objective::kMin);
  rep.worst_makespan = worst.value;
  rep.worst_witness  = worst.assignment;
  rep.best_makespan  = best.value;
  rep.best_witness   = best.assignment;
  rep.poa_ratio      = inefficiency_ratio(rep.worst_makespan, rep.opt);
  rep.pos_ratio      = inefficiency_ratio(rep.best_makespan, rep.opt);
  rep.winners        = std::move(sets);
  return rep;
}

}  // namespace

Grid default_grid(Instance const &inst, double alpha, double eps)
{
  return Grid::covering(eps, inst.max_finite(), alpha);
}

WinnerSets grid_winner_sets(SingleTaskRule const &rule, Instance const &inst, Grid const &grid,
                            double budget)
{
  WinnerSets out(inst.m());
  for (std::size_t j = 0; j < inst.m(); ++j)
  {
    out[j] = enumerate_equilibria(rule, inst.column(j), grid, budget).winner_set();
  }
  return out;
}

InefficiencyReport inefficiency_grid(MechanismId const &mech, Instance const &inst,
                                     Grid const &grid, double budget)
{
  SingleTaskRule const rule(mech);
  WinnerSets           sets = grid_winner_sets(rule, inst, grid, budget);
  for (std::size_t j = 0; j < sets.size(); ++j)
  {
    if (sets[j].empty())
    {
      throw std::runtime_error("no grid equilibrium for task " + std::to_string(j) + " under " +
                               mech.to_string());
    }
  }
  return report_from_sets(mech, inst, std::move(sets), InefficiencyReport::Source::kGrid);
}

InefficiencyReport inefficiency(MechanismId const &mech, Instance const &inst,
                                std::optional<Grid> grid, double budget)
{
  if (mech.task_independent())
  {
    return report_from_sets(mech, inst, achievable_winners(mech, inst),
                            InefficiencyReport::Source::kAnalytic);
  }

  Grid const g     = grid ? *grid : default_grid(inst);
  auto const found = enumerate_profile_equilibria(mech, inst, g, budget);
  if (found.empty())
  {
    throw std::runtime_error("no grid equilibrium of " + mech.to_string() + " found");
  }
  InefficiencyReport rep;
  rep.mechanism   = mech;
  rep.source      = InefficiencyReport::Source::kGrid;
  auto const opt  = opt_makespan(inst);
  rep.opt         = opt.value;
  rep.opt_witness = opt.assignment;
  rep.equilibria  = found.size();
  rep.worst_makespan = -1.0;
  rep.best_makespan  = std::numeric_limits<double>::infinity();
  for (auto const &eq : found)
  {
    double const v = makespan(inst, eq.outcome);
    if (v > rep.worst_makespan)
    {
      rep.worst_makespan = v;
      rep.worst_witness  = eq.outcome.winner;
    }
    if (v < rep.best_makespan)
    {
      rep.best_makespan = v;
      rep.best_witness  = eq.outcome.winner;
    }
  }
  rep.poa_ratio = inefficiency_ratio(rep.worst_makespan, rep.opt);
  rep.pos_ratio = inefficiency_ratio(rep.best_makespan, rep.opt);
  return rep;
}

double poa_bound(std::size_t n, double alpha)
{
  return static_cast<double>(n - 1) * alpha + 1.0;
}

double pos_bound(std::size_t n, double alpha)
{
  return static_cast<double>(n - 1) / alpha + 1.0;
}

std::vector<GeneratorSpec> default_frontier_suite(std::size_t n)
{
  std::string const          ns = std::to_string(n);
  std::vector<GeneratorSpec> suite{
      {"hat", {{"n", ns}}},
      {"tilde", {{"n", ns}}},
      {"uniform", {{"n", ns}}},
  };
  for (int seed = 1; seed <= 20; ++seed)
  {
    suite.push_back({"random",
                     {{"n", ns},
                      {"m", "4"},
                      {"seed", std::to_string(seed)},
                      {"lo", "0.1"},
                      {"hi", "4"},
                      {"step", "0.1"}}});
  }
  return suite;
}

std::vector<FrontierPoint> frontier_sweep(std::size_t n, std::vector<double> const &alphas,
                                          std::vector<GeneratorSpec> const &suite)
{
  for (double a : alphas)
  {
    if (!(a >= 1.0))
    {
      throw std::invalid_argument("frontier_sweep: every alpha must be at least 1");
    }
  }

  struct Job
  {
    std::size_t   alpha_index;
    std::size_t   suite_index;
    GeneratorSpec spec;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < alphas.size(); ++a)
  {
    for (std::size_t s = 0; s < suite.size(); ++s)
    {
      GeneratorSpec spec = suite[s];
      if (!spec.params.count("n"))
      {
        spec.params["n"] = std::to_string(n);
      }
      bool const hat_like = spec.name == "hat" || spec.name == "tilde";
      if (hat_like && !spec.params.count("alpha"))
      {
        if (!(alphas[a] > 1.0))
        {
          continue;
        }
        spec.params["alpha"] = format_exact(alphas[a]);
      }
      jobs.push_back({a, s, std::move(spec)});
    }
  }

  std::vector<InefficiencyReport> reports(jobs.size());
  detail::ErrorLatch              latch;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < jobs.size(); ++k)
  {
    try
    {
      Instance const inst = generate(jobs[k].spec);
      reports[k] = inefficiency(MechanismId::reserve_price(alphas[jobs[k].alpha_index]), inst);
    }
    catch (...)
    {
      latch.capture();
    }
  }
  latch.rethrow();

  std::vector<FrontierPoint> out(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a)
  {
    out[a].alpha     = alphas[a];
    out[a].poa_bound = poa_bound(n, alphas[a]);
    out[a].pos_bound = pos_bound(n, alphas[a]);
    out[a].poa_emp   = 0.0;
    out[a].pos_emp   = 0.0;
  }
  for (std::size_t k = 0; k < jobs.size(); ++k)
  {
    auto &p = out[jobs[k].alpha_index];
    if (reports[k].poa_ratio > p.poa_emp)
    {
      p.poa_emp = reports[k].poa_ratio;
      p.poa_arg = jobs[k].suite_index;
    }
    if (reports[k].pos_ratio > p.pos_emp)
    {
      p.pos_emp = reports[k].pos_ratio;
      p.pos_arg = jobs[k].suite_index;
    }
  }
  return out;
}

bool is_equilibrium(MechanismId const &mech, Instance const &inst, StrategyProfile const &profile,
                    Grid const &grid, double budget)
{
  if (profile.n() != inst.n() || profile.m() != inst.m())
  {
    throw std::invalid_argument("is_equilibrium: profile shape does not match instance");
  }
  if (!mech.task_independent())
  {
    return verify_profile(mech, inst, profile, grid, budget).equilibrium;
  }
  SingleTaskRule const rule(mech);
  for (std::size_t j = 0; j < inst.m(); ++j)
  {
    if (!verify_equilibrium(rule, inst.column(j), profile.task_bids(j), grid))
    {
      return false;
    }
  }
  return true;
}

MonotonicityResult monotonicity_check(MechanismId const &mech, Instance const &inst,
                                      StrategyProfile const &profile, Grid const &grid,
                                      std::size_t trials, std::uint64_t seed, Direction direction)
{
  if (!is_equilibrium(mech, inst, profile, grid))
  {
    throw std::invalid_argument("monotonicity_check: profile is not an equilibrium");
  }
  auto const   winner = apply(mech, profile).winner;
  double const cap    = grid.cap();
  Rng          rng(seed);

  MonotonicityResult res;
  for (std::size_t trial = 0; trial < trials; ++trial)
  {
    Matrix t = inst.times();
    for (std::size_t i = 0; i < inst.n(); ++i)
    {
      for (std::size_t j = 0; j < inst.m(); ++j)
      {
        double const v = t(i, j);
        if (inst.is_sentinel(v))
        {
          continue;
        }
        bool const   won   = winner[j] == i;
        bool const   lower = won == (direction == Direction::kForward);
        double const u     = rng.unit();
        if (lower)
        {
          t(i, j) = v * u;
        }
        else if (v < cap)
        {
          t(i, j) = v + u * (cap - v);
        }
      }
    }
    Instance modified(std::move(t), inst.big());
    ++res.trials;
    if (!is_equilibrium(mech, modified, profile, grid))
    {
      ++res.failures;
      res.passed = false;
      if (!res.counterexample)
      {
        res.counterexample = std::move(modified);
      }
    }
  }
  return res;
}

AnonymityResult anonymity_check(SingleTaskRule const &rule,
                                std::vector<std::vector<double>> const &true_vectors,
                                Grid const &grid, double budget)
{
  AnonymityResult res;
  for (auto const &t : true_vectors)
  {
    std::vector<double> sorted(t);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    {
      throw std::invalid_argument("anonymity_check: true vectors must be tie-free");
    }
    std::size_t const n    = t.size();
    WinnerSet const   base = enumerate_equilibria(rule, t, grid, budget).winner_set();

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do
    {
      std::vector<double> u(n);
      for (std::size_t i = 0; i < n; ++i)
      {
        u[perm[i]] = t[i];
      }
      WinnerSet const permuted = enumerate_equilibria(rule, u, grid, budget).winner_set();
      for (std::size_t w : base)
      {
        ++res.checked;
        if (!std::binary_search(permuted.begin(), permuted.end(), perm[w]))
        {
          res.passed = false;
          if (!res.counterexample)
          {
            res.counterexample = AnonymityViolation{t, perm, w, permuted};
          }
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return res;
}

std::optional<double> probe_boundary(SingleTaskRule const &rule)
{
  MechanismId const *mech = rule.mechanism();
  if (mech == nullptr)
  {
    return std::nullopt;
  }
  switch (mech->kind)
  {
  case MechanismKind::kFirstPrice:
    return 1.0;
  case MechanismKind::kReservePrice:
    return mech->alpha;
  default:
    return std::nullopt;
  }
}

Grid default_probe_grid(SingleTaskRule const &rule, std::size_t n, double eps)
{
  if (!(eps > 0.0))
  {
    throw std::invalid_argument("probe grid: eps must be positive");
  }
  double const top = probe_boundary(rule).value_or(2.0) + static_cast<double>(n + 1) * eps;
  auto const   k   = static_cast<long long>(std::ceil(top / eps - 1e-9));
  return Grid(eps, grid_value(k, eps));
}

ProbeMatrix probe_matrix(SingleTaskRule const &rule, std::size_t n, double eps,
                         std::optional<Grid> grid, double budget)
{
  if (n < 2)
  {
    throw std::invalid_argument("probe_matrix: n must be at least 2");
  }
  Grid const   g        = grid ? *grid : default_probe_grid(rule, n, eps);
  double const boundary = probe_boundary(rule).value_or(0.0);

  ProbeMatrix out{Matrix(n, n), eps, g.cap()};
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      if (i == j)
      {
        continue;
      }
      double      best  = 0.0;
      std::size_t fails = 0;
      for (long long k = 1;; ++k)
      {
        double const a = grid_value(k, eps);
        if (a > g.cap() * (1.0 + 1e-12))
        {
          break;
        }
        auto const v    = gen_canonical(n, i, j, a);
        auto const wins = enumerate_equilibria(rule, v, g, budget).winner_set();
        if (std::binary_search(wins.begin(), wins.end(), j))
        {
          best  = a;
          fails = 0;
        }
        else if (++fails >= n && a > boundary)
        {
          break;
        }
      }
      out.a(i, j) = best;
    }
  }
  return out;
}

bool check_tech1(double x, double y, double beta, double gamma)
{
  if (!(x >= 0.0) || !(y >= 0.0) || !(beta > 0.0) || !(gamma > 0.0))
  {
    throw std::invalid_argument("check_tech1: need x, y >= 0 and beta, gamma > 0");
  }
  if (x == 0.0 && y == 0.0)
  {
    throw std::invalid_argument("check_tech1: x and y are both zero");
  }
  double const lhs = (x + beta * y) / std::max(x, gamma * y);
  double const rhs = beta / gamma + 1.0;
  return lhs <= rhs * (1.0 + 1e-12);
}

CombiResult combi_max_ratio(Matrix const &a, double alpha, double eps)
{
  std::size_t const n = a.rows();
  if (a.cols() != n || n < 2)
  {
    throw std::invalid_argument("combi_max_ratio: need a square matrix with n >= 2");
  }
  if (n > 20)
  {
    throw std::invalid_argument("combi_max_ratio: exhaustive search limited to n <= 20");
  }
  CombiResult res;
  res.bound = static_cast<double>(n - 1) / (alpha * std::sqrt(2.0));
  res.value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
  {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
    {
      if (j != i)
      {
        others.push_back(j);
      }
    }
    std::size_t const subsets = std::size_t{1} << others.size();
    for (std::size_t mask = 1; mask < subsets; ++mask)
    {
      double      top   = -std::numeric_limits<double>::infinity();
      std::size_t count = 0;
      for (std::size_t b = 0; b < others.size(); ++b)
      {
        if (mask >> b & 1U)
        {
          top = std::max(top, a(i, others[b]));
          ++count;
        }
      }
      double const v = static_cast<double>(count) / (top + eps);
      if (v > res.value)
      {
        res.value = v;
        res.row   = i;
        res.subset.clear();
        for (std::size_t b = 0; b < others.size(); ++b)
        {
          if (mask >> b & 1U)
          {
            res.subset.push_back(others[b]);
          }
        }
      }
    }
  }
  res.holds = res.value > res.bound;
  return res;
}

CombiResult check_combi(Matrix const &a, double alpha, double eps)
{
  std::size_t const n = a.rows();
  if (a.cols() != n || n < 2)
  {
    throw PremiseViolation("check_combi: need a square matrix with n >= 2");
  }
  if (!(alpha > 0.0))
  {
    throw PremiseViolation("check_combi: alpha must be positive");
  }
  double const column_limit = static_cast<double>(n - 1) * alpha / std::sqrt(2.0);
  double const eps_limit    = alpha / (static_cast<double>(n - 1) * std::sqrt(2.0));
  if (!(eps > 0.0) || !(eps <= eps_limit))
  {
    throw PremiseViolation("check_combi: eps must lie in (0, alpha / ((n - 1) sqrt 2)]");
  }
  for (std::size_t j = 0; j < n; ++j)
  {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      double const v = a(i, j);
      if (i == j ? v != 0.0 : !(v > 0.0))
      {
        throw PremiseViolation("check_combi: need a zero diagonal and positive off-diagonal");
      }
      sum += v;
    }
    if (!(sum < column_limit))
    {
      throw PremiseViolation("check_combi: column " + std::to_string(j) +
                             " sum is not below (n - 1) alpha / sqrt 2");
    }
  }
  return combi_max_ratio(a, alpha, eps);
}

}  // namespace mechfront
