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

#include "mechfront/opt_solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mechfront {

EligibilityMask::EligibilityMask(std::size_t n, std::vector<std::vector<std::size_t>> allowed)
  : n_(n)
  , allowed_(std::move(allowed))
{
  for (auto &set : allowed_)
  {
    if (set.empty())
    {
      throw std::invalid_argument("EligibilityMask: empty allowed set");
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.back() >= n_)
    {
      throw std::out_of_range("EligibilityMask: machine index out of range");
    }
  }
}

EligibilityMask EligibilityMask::full(std::size_t n, std::size_t m)
{
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return EligibilityMask(n, std::vector<std::vector<std::size_t>>(m, all));
}

bool EligibilityMask::permits(std::size_t i, std::size_t j) const
{
  auto const &set = allowed_.at(j);
  return std::binary_search(set.begin(), set.end(), i);
}

namespace {

// Depth-first branch and bound over tasks in descending order of their
// cheapest eligible time. Partial loads are accumulated in branching order,
// so pruning keeps a small relative slack and every leaf is re-evaluated in
// task-index order; the reported value is always makespan(inst, assignment).
class BranchAndBound
{
public:
  BranchAndBound(Instance const &inst, EligibilityMask const &mask)
    : inst_(inst)
    , mask_(mask)
    , n_(inst.n())
    , m_(inst.m())
  {
    cheapest_.resize(m_);
    for (std::size_t j = 0; j < m_; ++j)
    {
      double c = std::numeric_limits<double>::infinity();
      for (std::size_t i : mask_.allowed(j))
      {
        c = std::min(c, inst_(i, j));
      }
      cheapest_[j] = c;
    }
    order_.resize(m_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return cheapest_[a] > cheapest_[b]; });
    suffix_.assign(m_ + 1, 0.0);
    for (std::size_t k = m_; k-- > 0;)
    {
      suffix_[k] = suffix_[k + 1] + cheapest_[order_[k]];
    }
  }

  Schedule solve()
  {
    seed_greedy();
    loads_.assign(n_, 0.0);
    current_.assign(m_, 0);
    descend(0, 0.0, 0.0);
    return best_;
  }

private:
  void seed_greedy()
  {
    std::vector<double> load(n_, 0.0);
    best_.assignment.assign(m_, 0);
    for (std::size_t j : order_)
    {
      std::size_t pick = mask_.allowed(j).front();
      for (std::size_t i : mask_.allowed(j))
      {
        if (load[i] + inst_(i, j) < load[pick] + inst_(pick, j))
        {
          pick = i;
        }
      }
      load[pick] += inst_(pick, j);
      best_.assignment[j] = pick;
    }
    best_.value = m_ == 0 ? 0.0 : makespan(inst_, best_.assignment);
  }

  double slack() const
  {
    return 1e-9 * std::max(1.0, best_.value);
  }

  void descend(std::size_t depth, double current_max, double load_sum)
  {
    if (depth == m_)
    {
      double const exact = makespan(inst_, current_);
      if (exact < best_.value)
      {
        best_.value      = exact;
        best_.assignment = current_;
      }
      return;
    }
    double const bound =
        std::max({current_max, cheapest_[order_[depth]],
                  (load_sum + suffix_[depth]) / static_cast<double>(n_)});
    if (bound > best_.value + slack())
    {
      return;
    }
    std::size_t const j = order_[depth];

    auto const &allowed = mask_.allowed(j);
    std::vector<std::size_t> tries(allowed);
    std::stable_sort(tries.begin(), tries.end(), [&](std::size_t a, std::size_t b) {
      return loads_[a] + inst_(a, j) < loads_[b] + inst_(b, j);
    });
    for (std::size_t i : tries)
    {
      double const next = loads_[i] + inst_(i, j);
      if (next > best_.value + slack())
      {
        continue;
      }
      loads_[i] = next;
      current_[j] = i;
      descend(depth + 1, std::max(current_max, next), load_sum + inst_(i, j));
      loads_[i] -= inst_(i, j);
    }
  }

  Instance const        &inst_;
  EligibilityMask const &mask_;
  std::size_t            n_;
  std::size_t            m_;
  std::vector<double>    cheapest_;
  std::vector<std::size_t> order_;
  std::vector<double>    suffix_;
  std::vector<double>    loads_;
  std::vector<std::size_t> current_;
  Schedule               best_;
};

void check_mask(Instance const &inst, EligibilityMask const &mask)
{
  if (mask.m() != inst.m() || mask.n() != inst.n())
  {
    throw std::invalid_argument("eligibility mask shape does not match instance");
  }
}

}  // namespace

Schedule opt_makespan(Instance const &inst)
{
  return opt_makespan_masked(inst, EligibilityMask::full(inst.n(), inst.m()), Objective::kMin);
}

Schedule opt_makespan_masked(Instance const &inst, EligibilityMask const &mask,
                             Objective objective)
{
  check_mask(inst, mask);
  if (inst.m() == 0)
  {
    return {0.0, {}};
  }
  if (objective == Objective::kMin)
  {
    return BranchAndBound(inst, mask).solve();
  }

  // Any assignment's makespan is some machine's load, which is at most that
  // machine's full eligible load; giving one machine all of its eligible
  // tasks attains it.
  std::size_t const   n = inst.n();
  std::vector<double> full(n, 0.0);
  for (std::size_t j = 0; j < inst.m(); ++j)
  {
    for (std::size_t i : mask.allowed(j))
    {
      full[i] += inst(i, j);
    }
  }
  std::size_t const heavy =
      static_cast<std::size_t>(std::max_element(full.begin(), full.end()) - full.begin());
  Schedule out;
  out.assignment.resize(inst.m());
  for (std::size_t j = 0; j < inst.m(); ++j)
  {
    out.assignment[j] = mask.permits(heavy, j) ? heavy : mask.allowed(j).front();
  }
  out.value = makespan(inst, out.assignment);
  return out;
}

}  // namespace mechfront
