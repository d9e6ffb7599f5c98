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

// Seeded generator with a fixed mapping from engine output to values. The
// std distributions are implementation-defined, so they are not used where
// outputs must be reproducible across toolchains.

#include <cstdint>
#include <random>

namespace mechfront {

class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : engine_(seed)
  {}

  std::uint64_t next()
  {
    return engine_();
  }

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound)
  {
    std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t       x     = engine_();
    while (x >= limit)
    {
      x = engine_();
    }
    return x % bound;
  }

  /// Uniform double in [0, 1).
  double unit()
  {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi)
  {
    return lo + (hi - lo) * unit();
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace mechfront
