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
#include <vector>

namespace mechfront {

/// Per-task set of machines permitted to receive that task.
class EligibilityMask
{
public:
  /// Every set must be nonempty and within [0, n).
  EligibilityMask(std::size_t n, std::vector<std::vector<std::size_t>> allowed);
  static EligibilityMask full(std::size_t n, std::size_t m);

  std::size_t n() const noexcept
  {
    return n_;
  }
  std::size_t m() const noexcept
  {
    return allowed_.size();
  }
  std::vector<std::size_t> const &allowed(std::size_t j) const
  {
    return allowed_[j];
  }
  bool permits(std::size_t i, std::size_t j) const;

private:
  std::size_t                           n_;
  std::vector<std::vector<std::size_t>> allowed_;
};

struct Schedule
{
  double                   value{0.0};
  std::vector<std::size_t> assignment;
};

enum class Objective
{
  kMin,
  kMax
};

/// Exact minimum makespan by depth-first branch and bound.
Schedule opt_makespan(Instance const &inst);

/// Exact min or max makespan over assignments respecting the mask. The
/// maximum is the largest full eligible load of a single machine.
Schedule opt_makespan_masked(Instance const &inst, EligibilityMask const &mask,
                             Objective objective);

}  // namespace mechfront
