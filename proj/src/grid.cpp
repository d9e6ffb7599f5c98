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

#include "mechfront/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace mechfront {

double grid_value(long long k, double step)
{
  double const inv   = 1.0 / step;
  double const whole = std::round(inv);
  if (whole >= 1.0 && std::abs(inv - whole) <= 1e-9 * whole)
  {
    return static_cast<double>(k) / whole;
  }
  return static_cast<double>(k) * step;
}

Grid::Grid(double step, double cap)
  : step_(step)
{
  if (!(step > 0.0) || !std::isfinite(step))
  {
    throw std::invalid_argument("Grid: step must be positive");
  }
  if (!(cap > 0.0) || !std::isfinite(cap))
  {
    throw std::invalid_argument("Grid: cap must be positive");
  }
  double const ratio = cap / step;
  double const k     = std::round(ratio);
  if (std::abs(ratio - k) > 1e-9 * std::max(1.0, k))
  {
    throw std::invalid_argument("Grid: cap must be a multiple of step");
  }
  if (k > 1e8)
  {
    throw std::invalid_argument("Grid: too many points");
  }
  last_ = static_cast<std::size_t>(k);
}

Grid Grid::covering(double step, double max_value, double alpha)
{
  if (!(step > 0.0))
  {
    throw std::invalid_argument("Grid: step must be positive");
  }
  double const target = alpha * max_value + 2.0 * step;
  double       k      = std::ceil(target / step - 1e-9);
  k                   = std::max(k, 1.0);
  return Grid(step, grid_value(static_cast<long long>(k), step));
}

std::vector<double> Grid::points() const
{
  std::vector<double> out(size());
  for (std::size_t k = 0; k < out.size(); ++k)
  {
    out[k] = point(k);
  }
  return out;
}

std::optional<std::size_t> Grid::index_of(double v) const noexcept
{
  if (!(v >= 0.0))
  {
    return std::nullopt;
  }
  double const k = std::round(v / step_);
  if (k > static_cast<double>(last_))
  {
    return std::nullopt;
  }
  double const p = point(static_cast<std::size_t>(k));
  if (std::abs(p - v) > 1e-9 * std::max(1.0, std::abs(v)))
  {
    return std::nullopt;
  }
  return static_cast<std::size_t>(k);
}

}  // namespace mechfront
