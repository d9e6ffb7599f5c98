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
#include "mechfront/cli.hpp"

#include "mechfront/analysis.hpp"
#include "mechfront/equilibrium.hpp"
#include "mechfront/errors.hpp"
#include "mechfront/instance_io.hpp"
#include "mechfront/instance_lab.hpp"
#include "mechfront/opt_solver.hpp"
#include "mechfront/parallel.hpp"
#include "mechfront/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace mechfront::cli {

namespace {

using nlohmann::json;

/// Six significant digits; infinities as the string "inf".
json num(double v)
{
  if (std::isinf(v))
  {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  double const rounded = std::strtod(buf, nullptr);
  if (rounded == std::floor(rounded) && std::abs(rounded) < 1e15)
  {
    return static_cast<long long>(rounded);
  }
  return rounded;
}

std::string csv_num(double v)
{
  if (std::isinf(v))
  {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

json index_array(std::vector<std::size_t> const &v)
{
  return json(v);
}

Grid parse_grid(std::string const &text)
{
  auto const comma = text.find(',');
  if (comma == std::string::npos)
  {
    throw std::invalid_argument("--grid expects eps,H");
  }
  std::size_t  used = 0;
  double const eps  = std::stod(text.substr(0, comma), &used);
  double const cap  = std::stod(text.substr(comma + 1));
  return Grid(eps, cap);
}

json grid_json(Grid const &g)
{
  return {{"step", num(g.step())}, {"cap", num(g.cap())}};
}

json report_json(InefficiencyReport const &rep)
{
  json out = {
      {"mechanism", rep.mechanism.to_string()},
      {"source", rep.source == InefficiencyReport::Source::kAnalytic ? "analytic" : "grid"},
      {"opt", num(rep.opt)},
      {"worst_makespan", num(rep.worst_makespan)},
      {"best_makespan", num(rep.best_makespan)},
      {"poa_ratio", num(rep.poa_ratio)},
      {"pos_ratio", num(rep.pos_ratio)},
      {"witnesses",
       {{"opt", index_array(rep.opt_witness)},
        {"worst", index_array(rep.worst_witness)},
        {"best", index_array(rep.best_witness)}}},
  };
  if (!rep.winners.empty())
  {
    out["winners"] = rep.winners;
  }
  if (rep.source == InefficiencyReport::Source::kGrid && rep.winners.empty())
  {
    out["equilibria"] = rep.equilibria;
  }
  return out;
}

std::vector<double> parse_list(std::string const &text)
{
  std::vector<double> out;
  std::stringstream   in(text);
  std::string         item;
  while (std::getline(in, item, ','))
  {
    std::size_t  used = 0;
    double const v    = std::stod(item, &used);
    if (used != item.size())
    {
      throw std::invalid_argument("malformed number '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty())
  {
    throw std::invalid_argument("empty list");
  }
  return out;
}

struct Options
{
  std::string              input;
  std::string              output;
  std::string              mech;
  std::string              grid;
  std::string              name;
  std::vector<std::string> params;
  std::string              alphas;
  std::string              suite;
  std::size_t              n{0};
  double                   eps{0.1};
  double                   cap{0.0};
  double                   budget{kDefaultBudget};
  std::uint64_t            seed{1};
};

int cmd_gen(Options const &o, std::ostream &out)
{
  GeneratorSpec spec{o.name, {}};
  for (auto const &p : o.params)
  {
    auto const eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
    {
      throw std::invalid_argument("generator parameters are key=value, got '" + p + "'");
    }
    spec.params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  Instance const inst = generate(spec);
  if (o.output.empty())
  {
    out << instance_to_json(inst).dump() << '\n';
  }
  else
  {
    write_instance_file(o.output, inst);
  }
  return kExitOk;
}

int cmd_opt(Options const &o, std::ostream &out)
{
  auto const inst  = read_instance_file(o.input);
  auto const sched = opt_makespan(inst);
  out << json{{"value", num(sched.value)}, {"assignment", sched.assignment}}.dump() << '\n';
  return kExitOk;
}

int cmd_equilibria(Options const &o, std::ostream &out)
{
  auto const        inst  = read_instance_file(o.input);
  auto const        mech  = MechanismId::parse(o.mech);
  double const      alpha = mech.kind == MechanismKind::kReservePrice ? mech.alpha : 1.0;
  Grid const        grid  = o.grid.empty() ? default_grid(inst, alpha) : parse_grid(o.grid);
  json              doc   = {{"mechanism", mech.to_string()}, {"grid", grid_json(grid)}};
  json              tasks = json::array();
  if (mech.task_independent())
  {
    SingleTaskRule const rule(mech);
    auto const           analytic = achievable_winners(mech, inst);
    for (std::size_t j = 0; j < inst.m(); ++j)
    {
      auto const set = enumerate_equilibria(rule, inst.column(j), grid, o.budget);
      tasks.push_back({{"task", j},
                       {"winners", set.winner_set()},
                       {"equilibria", set.size()},
                       {"analytic", analytic[j]}});
    }
  }
  else
  {
    auto const found = enumerate_profile_equilibria(mech, inst, grid, o.budget);
    for (std::size_t j = 0; j < inst.m(); ++j)
    {
      std::vector<std::size_t> w;
      for (auto const &eq : found)
      {
        w.push_back(eq.outcome.winner[j]);
      }
      std::sort(w.begin(), w.end());
      w.erase(std::unique(w.begin(), w.end()), w.end());
      tasks.push_back({{"task", j}, {"winners", w}});
    }
    doc["profiles"] = found.size();
  }
  doc["tasks"] = std::move(tasks);
  out << doc.dump() << '\n';
  return kExitOk;
}

int cmd_analyze(Options const &o, std::ostream &out)
{
  auto const          inst = read_instance_file(o.input);
  auto const          mech = MechanismId::parse(o.mech);
  std::optional<Grid> grid;
  if (!o.grid.empty())
  {
    grid = parse_grid(o.grid);
  }
  InefficiencyReport const rep = grid && mech.task_independent()
                                     ? inefficiency_grid(mech, inst, *grid, o.budget)
                                     : inefficiency(mech, inst, grid, o.budget);
  out << report_json(rep).dump() << '\n';
  return kExitOk;
}

int cmd_frontier(Options const &o, std::ostream &out)
{
  if (o.n < 2)
  {
    throw std::invalid_argument("frontier: -n must be at least 2");
  }
  std::vector<GeneratorSpec> suite;
  if (o.suite.empty() || o.suite == "default")
  {
    suite = default_frontier_suite(o.n);
  }
  else
  {
    std::stringstream in(o.suite);
    std::string       item;
    while (std::getline(in, item, ';'))
    {
      suite.push_back(GeneratorSpec::parse(item));
    }
  }
  auto alphas = parse_list(o.alphas);
  std::sort(alphas.begin(), alphas.end());
  auto const points = frontier_sweep(o.n, alphas, suite);
  out << "alpha,poa_bound,pos_bound,poa_emp,pos_emp\n";
  bool ok = true;
  for (auto const &p : points)
  {
    out << csv_num(p.alpha) << ',' << csv_num(p.poa_bound) << ',' << csv_num(p.pos_bound) << ','
        << csv_num(p.poa_emp) << ',' << csv_num(p.pos_emp) << '\n';
    ok = ok && p.poa_emp <= p.poa_bound && p.pos_emp <= p.pos_bound;
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_probe(Options const &o, std::ostream &out)
{
  auto const           mech = MechanismId::parse(o.mech);
  SingleTaskRule const rule(mech);
  std::optional<Grid>  grid;
  if (o.cap > 0.0)
  {
    grid = Grid(o.eps, o.cap);
  }
  auto const pm   = probe_matrix(rule, o.n, o.eps, grid, o.budget);
  json       rows = json::array();
  for (std::size_t i = 0; i < pm.a.rows(); ++i)
  {
    json row = json::array();
    for (double v : pm.a.row(i))
    {
      row.push_back(num(v));
    }
    rows.push_back(std::move(row));
  }
  out << json{{"mechanism", mech.to_string()},
              {"n", o.n},
              {"eps", num(pm.eps)},
              {"cap", num(pm.cap)},
              {"a", std::move(rows)}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_verify(Options const &o, std::ostream &out)
{
  auto const rep = run_suite(o.suite, o.seed);
  for (auto const &line : rep.lines)
  {
    out << line << '\n';
  }
  out << "suite " << rep.name << ": " << (rep.passed ? "PASS" : "FAIL") << '\n';
  return rep.passed ? kExitOk : kExitViolation;
}

}  // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Mechanism inefficiency toolkit for unrelated machine scheduling", "mechfront"};
  app.require_subcommand(1);
  Options o;

  auto *gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("name", o.name, "Generator name")->required();
  gen->add_option("params", o.params, "Generator parameters as key=value");
  gen->add_option("-o,--output", o.output, "Output file (.json for JSON, text otherwise)");

  auto *opt = app.add_subcommand("opt", "Optimal makespan and witness assignment");
  opt->add_option("-i,--input", o.input, "Instance file")->required();

  auto *eq = app.add_subcommand("equilibria", "Grid equilibrium winner sets per task");
  eq->add_option("-i,--input", o.input, "Instance file")->required();
  eq->add_option("--mech", o.mech, "fp, sp, spa:<alpha> or greedy")->required();
  eq->add_option("--grid", o.grid, "Grid as eps,H");
  eq->add_option("--budget", o.budget, "Profile budget");

  auto *an = app.add_subcommand("analyze", "Inefficiency report");
  an->add_option("-i,--input", o.input, "Instance file")->required();
  an->add_option("--mech", o.mech, "fp, sp, spa:<alpha> or greedy")->required();
  an->add_option("--grid", o.grid, "Use grid enumeration with eps,H");
  an->add_option("--budget", o.budget, "Profile budget");

  auto *fr = app.add_subcommand("frontier", "PoA/PoS frontier CSV for SP_alpha");
  fr->add_option("-n", o.n, "Machines")->required();
  fr->add_option("--alphas", o.alphas, "Comma-separated alphas")->required();
  fr->add_option("--suite", o.suite, "'default' or generator specs separated by ';'");

  auto *pr = app.add_subcommand("probe", "Slow-machine probe matrix");
  pr->add_option("--mech", o.mech, "fp, sp or spa:<alpha>")->required();
  pr->add_option("-n", o.n, "Machines")->required();
  pr->add_option("--eps", o.eps, "Grid step");
  pr->add_option("--cap", o.cap, "Grid cap (default from the rule)");
  pr->add_option("--budget", o.budget, "Profile budget");

  auto *ve = app.add_subcommand("verify", "Run a property suite");
  ve->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ve->add_option("--seed", o.seed, "Seed");

  std::vector<char const *> argv{"mechfront"};
  for (auto const &a : args)
  {
    argv.push_back(a.c_str());
  }
  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!configure_threads_from_env())
  {
    err << "error: MECHFRONT_THREADS must be a nonnegative integer\n";
    return kExitUsage;
  }

  try
  {
    if (*gen)
    {
      return cmd_gen(o, out);
    }
    if (*opt)
    {
      return cmd_opt(o, out);
    }
    if (*eq)
    {
      return cmd_equilibria(o, out);
    }
    if (*an)
    {
      return cmd_analyze(o, out);
    }
    if (*fr)
    {
      return cmd_frontier(o, out);
    }
    if (*pr)
    {
      return cmd_probe(o, out);
    }
    return cmd_verify(o, out);
  }
  catch (BudgetExceeded const &e)
  {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  }
  catch (std::exception const &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mechfront::cli
