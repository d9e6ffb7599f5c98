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
// Acceptance runner. Prints one PASS/FAIL line per criterion, preceded by
// indented detail lines. With no arguments every criterion runs; otherwise
// only the named ones (C1 .. C10). Exit status is 0 iff all selected pass.

#include "mechfront/analysis.hpp"
#include "mechfront/cli.hpp"
#include "mechfront/equilibrium.hpp"
#include "mechfront/instance_io.hpp"
#include "mechfront/instance_lab.hpp"
#include "mechfront/opt_solver.hpp"
#include "mechfront/suites.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace mechfront;

namespace {

std::string fmt(char const *f, ...)
{
  char    buf[1024];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

class Check
{
public:
  void expect(bool ok, std::string const &text)
  {
    std::cout << "    " << (ok ? "ok   " : "FAIL ") << text << '\n';
    passed_ = passed_ && ok;
  }

  void info(std::string const &text)
  {
    std::cout << "    info " << text << '\n';
  }

  bool passed() const
  {
    return passed_;
  }

private:
  bool passed_{true};
};

std::string set_str(std::vector<std::size_t> const &v)
{
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k)
  {
    out += (k ? "," : "") + std::to_string(v[k]);
  }
  return out + "}";
}

MechanismId reserve_or_fp(double alpha)
{
  return alpha == 1.0 ? MechanismId::first_price() : MechanismId::reserve_price(alpha);
}

/// Regression suite for n in {2, 3}; hat-like specs take the given alpha and
/// are dropped when alpha is 1.
std::vector<GeneratorSpec> regression_suite(double alpha)
{
  std::vector<GeneratorSpec> out;
  for (std::size_t n : {2U, 3U})
  {
    for (auto spec : default_frontier_suite(n))
    {
      spec.params["n"] = std::to_string(n);
      if ((spec.name == "hat" || spec.name == "tilde") && !spec.params.count("alpha"))
      {
        if (alpha == 1.0)
        {
          continue;
        }
        spec.params["alpha"] = format_exact(alpha);
      }
      out.push_back(spec);
    }
  }
  return out;
}

void c1_buckets(Check &c)
{
  for (double alpha : {1.5, 2.0, 3.0})
  {
    SingleTaskRule const rule(MechanismId::reserve_price(alpha));
    std::size_t          bad = 0;
    for (std::uint64_t k = 0; k < 50; ++k)
    {
      auto const   t    = gen_random(3, 1, 1000 + k, 0.1, 4.0, 0.1).column(0);
      double const top  = *std::max_element(t.begin(), t.end());
      auto const   got  = enumerate_equilibria(rule, t, Grid::covering(0.1, top, alpha)).winner_set();
      auto const   want = oracle::bucket(alpha, t);
      if (got != want)
      {
        if (bad++ == 0)
        {
          c.info(fmt("t=(%g,%g,%g): grid %s, bucket %s", t[0], t[1], t[2], set_str(got).c_str(),
                     set_str(want).c_str()));
        }
      }
    }
    c.expect(bad == 0, fmt("alpha=%g: 50 vectors, %zu discrepancies", alpha, bad));
  }
}

void c2_reserve_bounds(Check &c)
{
  std::size_t instances  = 0;
  std::size_t violations = 0;
  for (double alpha : {1.0, 1.5, 2.0, 4.0})
  {
    auto const suite = regression_suite(alpha);
    for (auto const &spec : suite)
    {
      Instance const    inst = generate(spec);
      std::size_t const n    = inst.n();
      auto const        rep  = inefficiency(reserve_or_fp(alpha), inst);
      bool const        ok   = rep.poa_ratio <= poa_bound(n, alpha) && rep.pos_ratio <= pos_bound(n, alpha);
      if (!ok)
      {
        ++violations;
        c.info(fmt("alpha=%g %s: poa %.6g pos %.6g", alpha, spec.to_string().c_str(), rep.poa_ratio,
                   rep.pos_ratio));
      }
    }
    instances = std::max(instances, suite.size());
  }
  c.expect(instances >= 25 && violations == 0,
           fmt("bounds: up to %zu instances per alpha over alpha in {1,1.5,2,4}, %zu violations",
               instances, violations));

  auto const tilde = inefficiency(MechanismId::reserve_price(2), gen_hat(3, 2, HatVariant::kTilde));
  c.expect(tilde.poa_ratio == 5.0, fmt("poa-tightness: tilde n=3 alpha=2 poa_ratio %.17g", tilde.poa_ratio));

  auto const hat = inefficiency(MechanismId::reserve_price(2), gen_hat(3, 2, HatVariant::kHat));
  c.info(fmt("hat n=3 alpha=2: opt %g, best %g, worst %g", hat.opt, hat.best_makespan,
             hat.worst_makespan));
  c.info("the diagonal alpha lies on the boundary alpha * 1 of the inclusive bucket, so the "
         "optimal schedule is itself an equilibrium");
  for (double d : {2.1, 2.01, 2.001})
  {
    Instance const near(Matrix({{d, kDefaultBig, kDefaultBig}, {kDefaultBig, d, kDefaultBig}, {1, 1, d}}));
    auto const     r = inefficiency(MechanismId::reserve_price(2), near);
    c.info(fmt("diagonal %g: pos_ratio %.9g", d, r.pos_ratio));
  }
  c.expect(hat.pos_ratio == 2.0, fmt("pos-tightness: hat n=3 alpha=2 pos_ratio %.17g (target 2)",
                                     hat.pos_ratio));
}

void c3_uniform(Check &c)
{
  std::vector<MechanismId> const mechs{MechanismId::first_price(), MechanismId::second_price(),
                                       MechanismId::reserve_price(1.5), MechanismId::reserve_price(2),
                                       MechanismId::reserve_price(4)};
  for (std::size_t n : {2U, 3U})
  {
    auto const                       base = gen_uniform(n);
    std::vector<std::size_t> const   all_first(n * n, 0);
    std::vector<std::size_t>         overloaded(n);
    std::iota(overloaded.begin(), overloaded.end(), 0);
    auto const hat = gen_uniform_hat(base, all_first, 0, overloaded);
    for (auto const &mech : mechs)
    {
      for (auto const *inst : {&base, &hat})
      {
        auto const rep = inefficiency(mech, *inst);
        c.expect(rep.poa_ratio >= static_cast<double>(n),
                 fmt("n=%zu %s %s: opt %g worst %g poa_ratio %g", n, mech.to_string().c_str(),
                     inst == &base ? "uniform" : "uniform_hat", rep.opt, rep.worst_makespan,
                     rep.poa_ratio));
      }
    }
  }
}

void c4_first_price(Check &c)
{
  auto const inst = gen_fp_pos(3, 0.01);
  auto const rep  = inefficiency(MechanismId::first_price(), inst);
  bool       only_zero = true;
  for (auto const &w : rep.winners)
  {
    only_zero = only_zero && w == WinnerSet{0};
  }
  c.expect(only_zero, "every task's achievable winner set is {machine 0}");
  c.expect(rep.pos_ratio == rep.poa_ratio && rep.poa_ratio >= 2.9 && rep.poa_ratio <= 3.0,
           fmt("eps=0.01: poa_ratio %.9g pos_ratio %.9g", rep.poa_ratio, rep.pos_ratio));
  double prev = rep.poa_ratio;
  bool   rising = true;
  for (double eps = 0.005; eps > 1e-4; eps /= 2)
  {
    double const r = inefficiency(MechanismId::first_price(), gen_fp_pos(3, eps)).poa_ratio;
    rising         = rising && r > prev && r < 3.0;
    c.info(fmt("eps=%g: ratio %.9g", eps, r));
    prev = r;
  }
  c.expect(rising, "ratio strictly increases below 3 as eps halves");
}

void c5_second_price(Check &c)
{
  std::size_t count = 0;
  std::size_t bad   = 0;
  for (std::size_t n : {2U, 3U})
  {
    for (auto const &spec : default_frontier_suite(n))
    {
      GeneratorSpec s = spec;
      s.params["n"]   = std::to_string(n);
      if ((s.name == "hat" || s.name == "tilde") && !s.params.count("alpha"))
      {
        s.params["alpha"] = "2";
      }
      auto const rep = inefficiency(MechanismId::second_price(), generate(s));
      ++count;
      bad += rep.pos_ratio == 1.0 ? 0 : 1;
    }
  }
  c.expect(bad == 0, fmt("pos_ratio = 1 on %zu suite instances, %zu exceptions", count, bad));

  SingleTaskRule const sp(MechanismId::second_price());
  for (double eps : {0.1, 0.01})
  {
    std::vector<double> const t{0.0, eps};
    std::vector<double> const s{1.0, 0.0};
    bool const   certified = verify_equilibrium(sp, t, s, Grid(eps, 2.0)).equilibrium;
    Instance const inst(Matrix({{0.0}, {eps}}));
    auto const   out   = apply(MechanismId::second_price(), StrategyProfile(Matrix({{1.0}, {0.0}})));
    double const value = makespan(inst, out.winner);
    double const ratio = inefficiency_ratio(value, opt_makespan(inst).value);
    c.expect(certified && ratio >= 1.0 / eps,
             fmt("eps=%g: s=(1,0) certified %s, makespan %g over opt 0, ratio %g >= %g", eps,
                 certified ? "yes" : "no", value, ratio, 1.0 / eps));
  }
}

void report_suite(Check &c, std::string const &name)
{
  auto const rep = run_suite(name, 1);
  for (auto const &line : rep.lines)
  {
    c.info(line);
  }
  c.expect(rep.passed, "suite " + name);
}

void c7_opt(Check &c)
{
  std::size_t opt_bad  = 0;
  std::size_t mask_bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed)
  {
    auto const inst = gen_random(3, 6, seed, 0.1, 4.0, 0.1);
    opt_bad += opt_makespan(inst).value == oracle::opt(inst) ? 0 : 1;
    std::vector<std::vector<std::size_t>> allowed(6);
    for (std::size_t j = 0; j < 6; ++j)
    {
      for (std::size_t i = 0; i < 3; ++i)
      {
        if ((seed >> ((i + 3 * j) % 16)) % 3 != 0)
        {
          allowed[j].push_back(i);
        }
      }
      if (allowed[j].empty())
      {
        allowed[j].push_back(seed % 3);
      }
    }
    double const hi = opt_makespan_masked(inst, EligibilityMask(3, allowed), Objective::kMax).value;
    mask_bad += hi == oracle::masked_extreme(inst, allowed, true) ? 0 : 1;
  }
  c.expect(opt_bad == 0, fmt("opt_makespan vs brute force: 100 instances, %zu mismatches", opt_bad));
  c.expect(mask_bad == 0, fmt("masked max vs brute force: 100 instances, %zu mismatches", mask_bad));
}

void c10_frontier(Check &c)
{
  std::ostringstream out;
  std::ostringstream err;
  int const code = cli::run({"frontier", "-n", "3", "--alphas", "1,1.5,2,4"}, out, err);
  c.expect(code == cli::kExitOk, fmt("exit code %d", code));
  std::istringstream lines(out.str());
  std::string        header;
  std::getline(lines, header);
  c.expect(header == "alpha,poa_bound,pos_bound,poa_emp,pos_emp", "header " + header);
  double const want[4][3] = {{1, 3, 3}, {1.5, 4, 7.0 / 3}, {2, 5, 2}, {4, 9, 1.5}};
  std::string  row;
  std::size_t  k = 0;
  while (std::getline(lines, row) && k < 4)
  {
    double v[5];
    if (std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3], &v[4]) != 5)
    {
      c.expect(false, "unparsable row " + row);
      return;
    }
    bool const bounds = v[0] == want[k][0] && v[1] == want[k][1] &&
                        std::abs(v[2] - want[k][2]) <= 1e-5;
    c.expect(bounds && v[3] <= v[1] && v[4] <= v[2], "row " + row);
    ++k;
  }
  c.expect(k == 4, fmt("%zu data rows", k));
}

struct Criterion
{
  char const                 *id;
  char const                 *title;
  double                      limit_s;
  std::function<void(Check &)> body;
};

}  // namespace

int main(int argc, char **argv)
{
  std::vector<Criterion> const all{
      {"C1", "bucket equivalence", 120, c1_buckets},
      {"C2", "reserve-price bounds and tightness", 60, c2_reserve_bounds},
      {"C3", "uniform instances reach n", 30, c3_uniform},
      {"C4", "first-price characterisation", 10, c4_first_price},
      {"C5", "second-price extremes", 10, c5_second_price},
      {"C6", "monotonicity suite", 120, [](Check &c) { report_suite(c, "monotonicity"); }},
      {"C7", "optimum oracle", 120, c7_opt},
      {"C8", "auxiliary inequalities",
       120,
       [](Check &c) {
         report_suite(c, "tech1");
         report_suite(c, "combi");
       }},
      {"C9", "anonymity", 120, [](Check &c) { report_suite(c, "anonymity"); }},
      {"C10", "frontier CSV", 180, c10_frontier},
  };

  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool                     all_ok = true;
  for (auto const &crit : all)
  {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), crit.id) == wanted.end())
    {
      continue;
    }
    Check      check;
    auto const start = std::chrono::steady_clock::now();
    try
    {
      crit.body(check);
    }
    catch (std::exception const &e)
    {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = secs < crit.limit_s;
    bool const ok      = check.passed() && in_time;
    std::cout << (ok ? "PASS " : "FAIL ") << crit.id << ' ' << crit.title
              << fmt(" (%.2f s, limit %.0f s%s)", secs, crit.limit_s, in_time ? "" : ", exceeded")
              << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
