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
// Serial reference enumeration against the parallel kernel, plus the exact
// makespan solver. Thread count follows MECHFRONT_THREADS.

#include "mechfront/analysis.hpp"
#include "mechfront/equilibrium.hpp"
#include "mechfront/instance_lab.hpp"
#include "mechfront/opt_solver.hpp"
#include "mechfront/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace mechfront;

namespace {

std::vector<double> const kTimes{1.3, 0.7, 2.1};

Grid bench_grid(benchmark::State const &state)
{
  return Grid(0.1, static_cast<double>(state.range(0)) / 10.0);
}

void BM_EnumerateReference(benchmark::State &state)
{
  SingleTaskRule const rule(MechanismId::reserve_price(2));
  Grid const           grid = bench_grid(state);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(enumerate_equilibria_reference(rule, kTimes, grid).size());
  }
  state.counters["profiles"] = static_cast<double>(grid.size() * grid.size() * grid.size());
}

void BM_EnumerateKernel(benchmark::State &state)
{
  SingleTaskRule const rule(MechanismId::reserve_price(2));
  Grid const           grid = bench_grid(state);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(enumerate_equilibria(rule, kTimes, grid).size());
  }
  state.counters["profiles"] = static_cast<double>(grid.size() * grid.size() * grid.size());
  state.counters["threads"]  = thread_count();
}

void BM_OptMakespan(benchmark::State &state)
{
  auto const inst = gen_random(3, static_cast<std::size_t>(state.range(0)), 42, 0.1, 4.0, 0.1);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(opt_makespan(inst).value);
  }
}

void BM_Frontier(benchmark::State &state)
{
  auto const suite = default_frontier_suite(3);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(frontier_sweep(3, {1, 1.5, 2, 4}, suite).size());
  }
}

}  // namespace

BENCHMARK(BM_EnumerateReference)->Arg(20)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateKernel)->Arg(20)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptMakespan)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Frontier)->Unit(benchmark::kMillisecond);

int main(int argc, char **argv)
{
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv))
  {
    return 1;
  }
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
