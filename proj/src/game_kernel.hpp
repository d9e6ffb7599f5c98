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

// Pure-equilibrium enumeration for a finite game with `players` players.
// Every player picks a strategy code in [0, strategies); unilateral
// deviations range over [0, deviations), deviations >= strategies, and codes
// below `strategies` mean the same thing in both ranges.
//
// The evaluator is copied once per thread and called as
//   eval(codes, utilities)
// writing the utility of every player for the given code vector.

#include "mechfront/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <span>
#include <vector>

namespace mechfront::detail {

struct GameShape
{
  std::size_t players{0};
  std::size_t strategies{0};
  std::size_t deviations{0};
};

struct GameEquilibria
{
  std::vector<std::uint32_t> codes;  ///< players entries per equilibrium, lexicographic
  double                     evaluations{0};
};

inline double game_cost(GameShape const &shape)
{
  double const n      = static_cast<double>(shape.players);
  double const s      = static_cast<double>(shape.strategies);
  double       others = 1.0;
  for (std::size_t k = 1; k < shape.players; ++k)
  {
    others *= s;
  }
  return others * s + n * others * static_cast<double>(shape.deviations);
}

inline double game_profiles(GameShape const &shape)
{
  double total = 1.0;
  for (std::size_t k = 0; k < shape.players; ++k)
  {
    total *= static_cast<double>(shape.strategies);
  }
  return total;
}

/// Decodes `code` into the slots of `out` other than `skip`, the lowest slot
/// most significant.
inline void decode_others(std::size_t code, std::size_t base, std::size_t skip,
                          std::span<std::uint32_t> out)
{
  for (std::size_t k = out.size(); k-- > 0;)
  {
    if (k == skip)
    {
      continue;
    }
    out[k] = static_cast<std::uint32_t>(code % base);
    code /= base;
  }
}

inline std::size_t encode_others(std::span<std::uint32_t const> codes, std::size_t base,
                                 std::size_t skip)
{
  std::size_t code = 0;
  for (std::size_t k = 0; k < codes.size(); ++k)
  {
    if (k != skip)
    {
      code = code * base + codes[k];
    }
  }
  return code;
}

class ErrorLatch
{
public:
  void capture() noexcept
  {
#pragma omp critical(mechfront_error_latch)
    {
      if (!error_)
      {
        error_ = std::current_exception();
      }
    }
  }
  void rethrow() const
  {
    if (error_)
    {
      std::rethrow_exception(error_);
    }
  }

private:
  std::exception_ptr error_;
};

template <class Eval>
GameEquilibria enumerate_game(GameShape const &shape, Eval const &eval)
{
  std::size_t const n = shape.players;
  std::size_t const s = shape.strategies;
  std::size_t const d = shape.deviations;

  std::size_t others = 1;
  for (std::size_t k = 1; k < n; ++k)
  {
    others *= s;
  }
  std::size_t const total = others * s;

  GameEquilibria result;
  result.evaluations = game_cost(shape);
  if (n == 0 || s == 0)
  {
    return result;
  }

  ErrorLatch latch;

  // best[i][c]: best utility of player i against opponent profile c.
  std::vector<std::vector<double>> best(n, std::vector<double>(others));
  for (std::size_t i = 0; i < n; ++i)
  {
#pragma omp parallel
    {
      Eval                       local = eval;
      std::vector<std::uint32_t> codes(n, 0);
      std::vector<double>        u(n);
#pragma omp for schedule(static)
      for (std::size_t c = 0; c < others; ++c)
      {
        try
        {
          decode_others(c, s, i, codes);
          double top = -std::numeric_limits<double>::infinity();
          for (std::size_t dev = 0; dev < d; ++dev)
          {
            codes[i] = static_cast<std::uint32_t>(dev);
            local(codes, u);
            top = std::max(top, u[i]);
          }
          best[i][c] = top;
        }
        catch (...)
        {
          latch.capture();
        }
      }
    }
    latch.rethrow();
  }

  // Fixed chunking keeps the merge order independent of the thread count.
  std::size_t const chunk   = std::max<std::size_t>(256, total / 1024);
  std::size_t const nchunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<std::uint32_t>> found(nchunks);

#pragma omp parallel
  {
    Eval                       local = eval;
    std::vector<std::uint32_t> codes(n);
    std::vector<double>        u(n);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t k = 0; k < nchunks; ++k)
    {
      try
      {
        std::size_t const begin = k * chunk;
        std::size_t const end   = std::min(total, begin + chunk);
        decode_others(begin, s, n, codes);
        for (std::size_t code = begin; code < end; ++code)
        {
          local(codes, u);
          bool stable = true;
          for (std::size_t i = 0; i < n && stable; ++i)
          {
            stable = u[i] >= best[i][encode_others(codes, s, i)];
          }
          if (stable)
          {
            found[k].insert(found[k].end(), codes.begin(), codes.end());
          }
          for (std::size_t pos = n; pos-- > 0;)
          {
            if (++codes[pos] < s)
            {
              break;
            }
            codes[pos] = 0;
          }
        }
      }
      catch (...)
      {
        latch.capture();
      }
    }
  }
  latch.rethrow();

  for (auto const &part : found)
  {
    result.codes.insert(result.codes.end(), part.begin(), part.end());
  }
  return result;
}

}  // namespace mechfront::detail
