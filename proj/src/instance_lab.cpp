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
#include "mechfront/instance_lab.hpp"

#include "mechfront/grid.hpp"
#include "mechfront/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mechfront {

Instance gen_uniform(std::size_t n)
{
  if (n < 2)
  {
    throw std::invalid_argument("gen_uniform: n must be at least 2");
  }
  return Instance(Matrix(n, n * n, 1.0));
}

Instance gen_uniform_hat(Instance const &uniform, std::vector<std::size_t> const &assignment,
                         std::size_t k, std::vector<std::size_t> const &overloaded)
{
  std::size_t const n = uniform.n();
  std::size_t const m = uniform.m();
  if (m != n * n || assignment.size() != m)
  {
    throw std::invalid_argument("gen_uniform_hat: expects a gen_uniform instance and assignment");
  }
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < m; ++j)
    {
      if (uniform(i, j) != 1.0)
      {
        throw std::invalid_argument("gen_uniform_hat: expects an all-ones instance");
      }
    }
  }
  if (k >= n)
  {
    throw std::out_of_range("gen_uniform_hat: machine out of range");
  }
  std::vector<bool> keep(m, false);
  for (std::size_t j : overloaded)
  {
    if (j >= m || assignment[j] != k || keep[j])
    {
      throw std::invalid_argument("gen_uniform_hat: overloaded tasks must be distinct tasks won by k");
    }
    keep[j] = true;
  }
  if (overloaded.size() != n)
  {
    throw std::invalid_argument("gen_uniform_hat: exactly n overloaded tasks required");
  }

  Matrix t = uniform.times();
  for (std::size_t j = 0; j < m; ++j)
  {
    std::size_t const owner = assignment.at(j);
    if (owner >= n)
    {
      throw std::out_of_range("gen_uniform_hat: assignment out of range");
    }
    if (!(owner == k && keep[j]))
    {
      t(owner, j) = 0.0;
    }
  }
  return Instance(std::move(t), uniform.big());
}

Instance gen_tradeoff(std::size_t n, double rho, double big)
{
  if (n < 2)
  {
    throw std::invalid_argument("gen_tradeoff: n must be at least 2");
  }
  if (!(rho > 1.0))
  {
    throw std::invalid_argument("gen_tradeoff: rho must exceed 1");
  }
  double const span = static_cast<double>(n - 1);
  if (big < rho * span)
  {
    throw std::invalid_argument("gen_tradeoff: big must be at least rho (n - 1)");
  }
  Matrix t(n, n, big);
  t(0, 0) = span;
  for (std::size_t j = 1; j < n; ++j)
  {
    t(0, j) = rho - 1.0;
    t(j, j) = span;
  }
  return Instance(std::move(t), big);
}

Instance gen_fp_pos(std::size_t n, double eps)
{
  if (n < 2)
  {
    throw std::invalid_argument("gen_fp_pos: n must be at least 2");
  }
  if (!(eps > 0.0))
  {
    throw std::invalid_argument("gen_fp_pos: eps must be positive");
  }
  Matrix t(n, n, kDefaultBig);
  for (std::size_t j = 0; j < n; ++j)
  {
    t(0, j) = 1.0;
  }
  for (std::size_t j = 1; j < n; ++j)
  {
    t(j, j) = 1.0 + eps;
  }
  return Instance(std::move(t));
}

std::vector<double> gen_canonical(std::size_t n, std::size_t fast, std::size_t slow, double a,
                                  double big)
{
  if (fast >= n || slow >= n)
  {
    throw std::out_of_range("gen_canonical: machine out of range");
  }
  if (fast == slow)
  {
    throw std::invalid_argument("gen_canonical: fast and slow machines coincide");
  }
  if (!(a > 0.0))
  {
    throw std::invalid_argument("gen_canonical: a must be positive");
  }
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    v[i] = big + static_cast<double>(i + 1);
  }
  v[fast] = 1.0;
  v[slow] = a;
  return v;
}

Instance gen_hat(std::size_t n, double alpha, HatVariant variant)
{
  if (n < 2)
  {
    throw std::invalid_argument("gen_hat: n must be at least 2");
  }
  if (!(alpha > 1.0))
  {
    throw std::invalid_argument("gen_hat: alpha must exceed 1");
  }
  double const diag = variant == HatVariant::kTilde ? 1.0 : alpha;
  double const last = variant == HatVariant::kTilde ? alpha : 1.0;
  Matrix       t(n, n, kDefaultBig);
  for (std::size_t j = 0; j + 1 < n; ++j)
  {
    t(j, j)     = diag;
    t(n - 1, j) = last;
  }
  t(n - 1, n - 1) = variant == HatVariant::kTilde ? 1.0 : alpha;
  return Instance(std::move(t));
}

Matrix gen_circulant(std::size_t n, double alpha, double delta)
{
  if (n < 2)
  {
    throw std::invalid_argument("gen_circulant: n must be at least 2");
  }
  if (!(delta > 0.0) || !(delta < std::sqrt(2.0)))
  {
    throw std::invalid_argument("gen_circulant: delta must lie in (0, sqrt 2)");
  }
  double const scale = alpha * (std::sqrt(2.0) - delta) / static_cast<double>(n - 1);
  Matrix       a(n, n);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      a(i, j) = scale * static_cast<double>((j + n - i) % n);
    }
  }
  return a;
}

Instance gen_random(std::size_t n, std::size_t m, std::uint64_t seed, double lo, double hi,
                    double step)
{
  if (n == 0)
  {
    throw std::invalid_argument("gen_random: n must be positive");
  }
  if (!(lo >= 0.0) || !(hi > lo) || !(step > 0.0))
  {
    throw std::invalid_argument("gen_random: need 0 <= lo < hi and step > 0");
  }
  auto const klo = static_cast<long long>(std::ceil(lo / step - 1e-9));
  auto const khi = static_cast<long long>(std::floor(hi / step + 1e-9));
  if (khi < klo)
  {
    throw std::invalid_argument("gen_random: no grid multiple in [lo, hi]");
  }
  auto const choices = static_cast<std::uint64_t>(khi - klo + 1);
  Rng        rng(seed);
  Matrix     t(n, m);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < m; ++j)
    {
      t(i, j) = grid_value(klo + static_cast<long long>(rng.below(choices)), step);
    }
  }
  return Instance(t, Instance::default_big_for(t));
}

GeneratorSpec GeneratorSpec::parse(std::string const &text)
{
  GeneratorSpec spec;
  auto const    colon = text.find(':');
  spec.name           = text.substr(0, colon);
  if (spec.name.empty())
  {
    throw std::invalid_argument("generator spec without a name: '" + text + "'");
  }
  if (colon == std::string::npos)
  {
    return spec;
  }
  std::stringstream rest(text.substr(colon + 1));
  std::string       item;
  while (std::getline(rest, item, ','))
  {
    auto const eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
    {
      throw std::invalid_argument("malformed generator parameter '" + item + "'");
    }
    spec.params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return spec;
}

std::string GeneratorSpec::to_string() const
{
  std::string out = name;
  char        sep = ':';
  for (auto const &[k, v] : params)
  {
    out += sep;
    out += k + "=" + v;
    sep = ',';
  }
  return out;
}

double GeneratorSpec::number(std::string const &key) const
{
  auto it = params.find(key);
  if (it == params.end())
  {
    throw std::invalid_argument("generator " + name + " needs parameter '" + key + "'");
  }
  std::size_t used = 0;
  double      v    = 0.0;
  try
  {
    v = std::stod(it->second, &used);
  }
  catch (std::exception const &)
  {
    used = 0;
  }
  if (used == 0 || used != it->second.size())
  {
    throw std::invalid_argument("generator parameter " + key + " is not a number: '" +
                                it->second + "'");
  }
  return v;
}

double GeneratorSpec::number(std::string const &key, double fallback) const
{
  return params.count(key) ? number(key) : fallback;
}

std::size_t GeneratorSpec::count(std::string const &key) const
{
  double const v = number(key);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e15)
  {
    throw std::invalid_argument("generator parameter " + key + " must be a nonnegative integer");
  }
  return static_cast<std::size_t>(v);
}

std::size_t GeneratorSpec::count(std::string const &key, std::size_t fallback) const
{
  return params.count(key) ? count(key) : fallback;
}

Instance generate(GeneratorSpec const &spec)
{
  static std::map<std::string, std::vector<std::string>> const known{
      {"uniform", {"n"}},
      {"uniform_hat", {"n"}},
      {"tradeoff", {"n", "rho", "big"}},
      {"fp_pos", {"n", "eps"}},
      {"hat", {"n", "alpha"}},
      {"tilde", {"n", "alpha"}},
      {"random", {"n", "m", "seed", "lo", "hi", "step"}},
      {"circulant", {"n", "alpha", "delta"}},
  };
  auto it = known.find(spec.name);
  if (it == known.end())
  {
    throw std::invalid_argument("unknown generator '" + spec.name + "'");
  }
  for (auto const &[k, v] : spec.params)
  {
    if (std::find(it->second.begin(), it->second.end(), k) == it->second.end())
    {
      throw std::invalid_argument("generator " + spec.name + " has no parameter '" + k + "'");
    }
  }

  std::string const &name = spec.name;
  if (name == "uniform")
  {
    return gen_uniform(spec.count("n"));
  }
  if (name == "uniform_hat")
  {
    // Every task on machine 0, the first n tasks kept.
    std::size_t const        n = spec.count("n");
    Instance const           base = gen_uniform(n);
    std::vector<std::size_t> assignment(base.m(), 0);
    std::vector<std::size_t> kept(n);
    for (std::size_t j = 0; j < n; ++j)
    {
      kept[j] = j;
    }
    return gen_uniform_hat(base, assignment, 0, kept);
  }
  if (name == "tradeoff")
  {
    return gen_tradeoff(spec.count("n"), spec.number("rho"), spec.number("big", kDefaultBig));
  }
  if (name == "fp_pos")
  {
    return gen_fp_pos(spec.count("n"), spec.number("eps"));
  }
  if (name == "hat" || name == "tilde")
  {
    return gen_hat(spec.count("n"), spec.number("alpha"),
                   name == "hat" ? HatVariant::kHat : HatVariant::kTilde);
  }
  if (name == "circulant")
  {
    return Instance(gen_circulant(spec.count("n"), spec.number("alpha"), spec.number("delta")));
  }
  return gen_random(spec.count("n"), spec.count("m"), spec.count("seed", 0), spec.number("lo", 0.1),
                    spec.number("hi", 4.0), spec.number("step", 0.1));
}

}  // namespace mechfront
