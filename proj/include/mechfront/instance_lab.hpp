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

// Instance generators for the lower-bound constructions and for seeded random
// desk-scale suites. Sentinel ("arbitrarily large") entries are the
// instance's big value unless noted.

#include "mechfront/model.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mechfront {

/// n machines, n^2 tasks, all times 1. n >= 2.
Instance gen_uniform(std::size_t n);

/// Starting from gen_uniform(n) and an equilibrium assignment, zeroes every
/// task a machine wins except the n tasks in `overloaded` (all won by
/// machine k), which keep time 1 on k. The optimum of the result is 1.
Instance gen_uniform_hat(Instance const &uniform, std::vector<std::size_t> const &assignment,
                         std::size_t k, std::vector<std::size_t> const &overloaded);

/// n x n: row 0 = (n-1, rho-1, ..., rho-1); row i >= 1 has n-1 at column i
/// and big elsewhere. Requires rho > 1 and big >= rho (n-1).
Instance gen_tradeoff(std::size_t n, double rho, double big = kDefaultBig);

/// n x n: machine 0 takes time 1 on every task; for j >= 1 machine j takes
/// 1 + eps on task j. Everything else is big.
Instance gen_fp_pos(std::size_t n, double eps);

/// Cost vector with 1 at `fast`, `a` at `slow` and pairwise distinct dummies
/// big + (i + 1) elsewhere.
std::vector<double> gen_canonical(std::size_t n, std::size_t fast, std::size_t slow, double a,
                                  double big = kDefaultBig);

enum class HatVariant
{
  kTilde,  ///< diagonal 1, last row (alpha, ..., alpha, 1)
  kHat,    ///< diagonal alpha, last row (1, ..., 1, alpha)
};

/// n x n matrices of the task-independent trade-off; big off the diagonal
/// and the last row. n >= 2, alpha > 1.
Instance gen_hat(std::size_t n, double alpha, HatVariant variant);

/// a[i][j] = alpha (sqrt 2 - delta) / (n - 1) * ((j - i) mod n). 0 < delta < sqrt 2.
Matrix gen_circulant(std::size_t n, double alpha, double delta);

/// Seeded matrix of multiples of `step` drawn uniformly from those in
/// [lo, hi]. Big is the smallest power of ten satisfying the dominance rule.
Instance gen_random(std::size_t n, std::size_t m, std::uint64_t seed, double lo, double hi,
                    double step);

/// Named generator with string-valued parameters, used by the CLI and the
/// frontier suite. Names: uniform, uniform_hat, tradeoff, fp_pos, hat, tilde,
/// circulant, random.
struct GeneratorSpec
{
  std::string                        name;
  std::map<std::string, std::string> params;

  /// Parses "name" or "name:key=value,key=value".
  static GeneratorSpec parse(std::string const &text);
  std::string          to_string() const;

  double      number(std::string const &key) const;
  double      number(std::string const &key, double fallback) const;
  std::size_t count(std::string const &key) const;
  std::size_t count(std::string const &key, std::size_t fallback) const;
};

Instance generate(GeneratorSpec const &spec);

}  // namespace mechfront
