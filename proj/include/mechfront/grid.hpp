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

#include <cstddef>
#include <optional>
#include <vector>

namespace mechfront {

/// k-th multiple of `step`. When 1/step is an integer D the value is computed
/// as k / D, which rounds to the same double as the decimal literal (3 / 10.0
/// == 0.3), so grid points compare exactly against values parsed from files.
double grid_value(long long k, double step);

/// Strategy discretisation {0, step, 2 step, ..., cap}.
class Grid
{
public:
  Grid(double step, double cap);

  /// Cap = alpha * max_value + 2 step, rounded up to a multiple of step.
  static Grid covering(double step, double max_value, double alpha = 1.0);

  double step() const noexcept
  {
    return step_;
  }
  double cap() const noexcept
  {
    return grid_value(static_cast<long long>(last_), step_);
  }
  std::size_t size() const noexcept
  {
    return last_ + 1;
  }
  double point(std::size_t k) const noexcept
  {
    return grid_value(static_cast<long long>(k), step_);
  }
  std::vector<double> points() const;

  /// Index of the grid point within 1e-9 (relative) of v, if any.
  std::optional<std::size_t> index_of(double v) const noexcept;

  /// A bid one step above the cap. Deviating to it loses against any
  /// on-grid bid, modelling withdrawal from the task.
  double withdraw_bid() const noexcept
  {
    return grid_value(static_cast<long long>(last_ + 1), step_);
  }

  bool operator==(Grid const &) const = default;

private:
  double      step_;
  std::size_t last_;
};

}  // namespace mechfront
