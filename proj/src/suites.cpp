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
#include "mechfront/suites.hpp"

#include "mechfront/analysis.hpp"
#include "mechfront/equilibrium.hpp"
#include "mechfront/instance_lab.hpp"
#include "mechfront/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>

namespace mechfront {

namespace {

std::string format(char const *fmt, ...)
{
  char    buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

void record(SuiteReport &rep, bool ok, std::string const &text)
{
  rep.lines.push_back((ok ? "ok   " : "FAIL ") + text);
  rep.passed = rep.passed && ok;
}

std::string join(std::vector<std::size_t> const &v)
{
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k)
  {
    out += (k ? "," : "") + std::to_string(v[k]);
  }
  return out + "}";
}

SuiteReport suite_buckets(std::uint64_t seed)
{
  SuiteReport rep{"buckets", true, {}};
  for (double alpha : {1.5, 2.0, 3.0})
  {
    auto const     mech = MechanismId::reserve_price(alpha);
    SingleTaskRule rule(mech);
    std::size_t    bad = 0;
    std::string    first;
    for (std::uint64_t k = 0; k < 50; ++k)
    {
      auto const t    = gen_random(3, 1, seed * 1000 + k, 0.1, 4.0, 0.1).column(0);
      double     top  = *std::max_element(t.begin(), t.end());
      Grid const grid = Grid::covering(0.1, top, alpha);
      auto const got  = enumerate_equilibria(rule, t, grid).winner_set();
      auto const want = achievable_winners(mech, t);
      if (got != want)
      {
        if (bad++ == 0)
        {
          first = format(" (first: t=(%g,%g,%g) grid %s vs bucket %s)", t[0], t[1], t[2],
                         join(got).c_str(), join(want).c_str());
        }
      }
    }
    record(rep, bad == 0,
           format("alpha=%g: 50 vectors, %zu discrepancies%s", alpha, bad, first.c_str()));
  }
  return rep;
}

SuiteReport suite_monotonicity(std::uint64_t seed)
{
  SuiteReport rep{"monotonicity", true, {}};
  std::vector<MechanismId> const mechs{MechanismId::first_price(), MechanismId::second_price(),
                                       MechanismId::reserve_price(2.0)};
  Rng         rng(seed);
  std::size_t reverse_failures = 0;
  std::size_t reverse_trials   = 0;
  for (std::size_t k = 0; k < 10; ++k)
  {
    std::size_t const n    = 2 + k % 2;
    Instance const    inst = gen_random(n, 2, seed * 100 + k, 0.1, 4.0, 0.1);
    for (auto const &mech : mechs)
    {
      double const         alpha = mech.kind == MechanismKind::kReservePrice ? mech.alpha : 1.0;
      Grid const           grid  = default_grid(inst, alpha);
      SingleTaskRule const rule(mech);
      std::vector<EquilibriumSet> sets;
      for (std::size_t j = 0; j < inst.m(); ++j)
      {
        sets.push_back(enumerate_equilibria(rule, inst.column(j), grid));
      }
      if (std::any_of(sets.begin(), sets.end(), [](auto const &s) { return s.empty(); }))
      {
        record(rep, false,
               format("%s instance %zu: a task has no grid equilibrium", mech.to_string().c_str(), k));
        continue;
      }
      std::size_t trials = 0;
      std::size_t fails  = 0;
      for (int r = 0; r < 3; ++r)
      {
        Matrix reports(n, inst.m());
        for (std::size_t j = 0; j < inst.m(); ++j)
        {
          auto const bids = sets[j].bids(rng.below(sets[j].size()));
          for (std::size_t i = 0; i < n; ++i)
          {
            reports(i, j) = bids[i];
          }
        }
        StrategyProfile const profile(reports);
        auto const fwd = monotonicity_check(mech, inst, profile, grid, 200, rng.next());
        trials += fwd.trials;
        fails += fwd.failures;
        auto const rev =
            monotonicity_check(mech, inst, profile, grid, 200, rng.next(), Direction::kReverse);
        reverse_trials += rev.trials;
        reverse_failures += rev.failures;
      }
      record(rep, fails == 0,
             format("%s instance %zu (n=%zu): %zu/%zu modified instances keep the equilibrium",
                    mech.to_string().c_str(), k, n, trials - fails, trials));
    }
  }
  record(rep, reverse_failures > 0,
         format("reverse-direction control: %zu of %zu trials broke the equilibrium",
                reverse_failures, reverse_trials));
  return rep;
}

SuiteReport suite_anonymity(std::uint64_t seed)
{
  SuiteReport rep{"anonymity", true, {}};
  Rng         rng(seed);

  auto seeded_pair = [&](double unit) {
    auto const a = static_cast<double>(1 + rng.below(10));
    auto       b = static_cast<double>(1 + rng.below(9));
    if (b >= a)
    {
      b += 1.0;
    }
    return std::vector<double>{a * unit, b * unit};
  };

  std::vector<std::vector<double>> fp_vectors{{1.0, 2.0}, {2.0, 0.5}, {1.5, 3.0}};
  std::vector<std::vector<double>> spa_vectors{{1.0, 1.9}, {0.5, 0.8}, {2.0, 3.5}};
  for (int k = 0; k < 3; ++k)
  {
    fp_vectors.push_back(seeded_pair(0.3));
    spa_vectors.push_back(seeded_pair(0.3));
  }

  auto run = [&](SingleTaskRule const &rule, std::vector<std::vector<double>> const &vectors,
                 double alpha, bool expect_pass) {
    double top = 0.0;
    for (auto const &v : vectors)
    {
      top = std::max(top, *std::max_element(v.begin(), v.end()));
    }
    Grid const grid = Grid::covering(0.1, top, alpha);
    auto const res  = anonymity_check(rule, vectors, grid);
    std::string detail;
    if (res.counterexample)
    {
      auto const &c = *res.counterexample;
      detail        = format("; counterexample t=(%g,%g) winner %zu, permuted winners %s",
                      c.true_times[0], c.true_times[1], c.winner, join(c.permuted_winners).c_str());
    }
    record(rep, res.passed == expect_pass,
           format("%s on %zu vectors: %s (%zu checks)%s", rule.name().c_str(), vectors.size(),
                  res.passed ? "anonymous" : "not anonymous", res.checked, detail.c_str()));
  };

  run(SingleTaskRule(MechanismId::first_price()), fp_vectors, 1.0, true);
  run(SingleTaskRule(MechanismId::reserve_price(2.0)), spa_vectors, 2.0, true);
  run(index_biased_rule(), {{1.0, 2.0}}, 1.0, false);
  return rep;
}

SuiteReport suite_tech1(std::uint64_t seed)
{
  SuiteReport rep{"tech1", true, {}};
  Rng         rng(seed);
  std::size_t bad = 0;
  for (int k = 0; k < 100000; ++k)
  {
    double const x     = rng.uniform(1e-3, 10.0);
    double const y     = rng.uniform(1e-3, 10.0);
    double const beta  = rng.uniform(1e-2, 10.0);
    double const gamma = rng.uniform(1e-2, 10.0);
    bad += check_tech1(x, y, beta, gamma) ? 0 : 1;
  }
  record(rep, bad == 0, format("100000 random tuples, %zu violations", bad));
  bool const tight = check_tech1(1.0, 1.0, 2.0, 1.0);
  record(rep, tight, "boundary x = gamma y holds with equality");
  return rep;
}

SuiteReport suite_combi(std::uint64_t seed)
{
  SuiteReport rep{"combi", true, {}};
  Rng         rng(seed);
  std::size_t bad = 0;
  for (int k = 0; k < 1000; ++k)
  {
    std::size_t const n     = 2 + rng.below(4);
    double const      alpha = rng.uniform(1.0, 4.0);
    double const      limit = static_cast<double>(n - 1) * alpha / std::sqrt(2.0);
    double const      eps =
        alpha / (static_cast<double>(n - 1) * std::sqrt(2.0)) * (1.0 - rng.unit());
    Matrix a(n, n);
    for (std::size_t j = 0; j < n; ++j)
    {
      double raw = 0.0;
      for (std::size_t i = 0; i < n; ++i)
      {
        a(i, j) = i == j ? 0.0 : 1.0 - rng.unit();
        raw += a(i, j);
      }
      double const target = limit * rng.uniform(0.05, 0.999);
      for (std::size_t i = 0; i < n; ++i)
      {
        a(i, j) *= target / raw;
      }
    }
    bad += check_combi(a, alpha, eps).holds ? 0 : 1;
  }
  record(rep, bad == 0, format("1000 premise-satisfying matrices, %zu violations", bad));

  for (std::size_t n : {2U, 3U, 5U})
  {
    for (double alpha : {1.5, 2.0})
    {
      double const delta = std::sqrt(2.0) / static_cast<double>(n) + 0.05;
      auto const   a     = gen_circulant(n, alpha, delta);
      double const want  = static_cast<double>(n - 1) / (alpha * (std::sqrt(2.0) - delta));
      double const got   = combi_max_ratio(a, alpha, 0.0).value;
      record(rep, std::abs(got - want) <= 1e-9,
             format("circulant n=%zu alpha=%g delta=%.4f: max ratio %.12g, expected %.12g", n,
                    alpha, delta, got, want));
    }
  }
  return rep;
}

}  // namespace

std::vector<std::string> const &suite_names()
{
  static std::vector<std::string> const names{"monotonicity", "anonymity", "tech1", "combi",
                                              "buckets"};
  return names;
}

SuiteReport run_suite(std::string const &name, std::uint64_t seed)
{
  if (name == "monotonicity")
  {
    return suite_monotonicity(seed);
  }
  if (name == "anonymity")
  {
    return suite_anonymity(seed);
  }
  if (name == "tech1")
  {
    return suite_tech1(seed);
  }
  if (name == "combi")
  {
    return suite_combi(seed);
  }
  if (name == "buckets")
  {
    return suite_buckets(seed);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SingleTaskRule index_biased_rule()
{
  return SingleTaskRule::custom(
      "index-biased", [](std::span<double const> bids, std::span<double> pay) {
        std::size_t const w = lowest_bidder(bids);
        std::fill(pay.begin(), pay.end(), 0.0);
        if (w == 0)
        {
          pay[0] = bids[0];
        }
        return w;
      });
}

}  // namespace mechfront
