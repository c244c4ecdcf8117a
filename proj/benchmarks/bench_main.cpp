#include <benchmark/benchmark.h>

#include "qsched/analysis.hpp"
#include "qsched/conditions.hpp"
#include "qsched/enumerate.hpp"
#include "qsched/interval_schedule.hpp"
#include "qsched/line_graph.hpp"
#include "qsched/oracle.hpp"
#include "qsched/random.hpp"

namespace {

using namespace qsched;

ConflictGraph seeded_graph(int n, int percent) {
  SplitMix64 rng(0xbe9c0000u + static_cast<std::uint64_t>(n));
  return random_connected_graph(rng, n, percent);
}

DemandVector seeded_demands(const ConflictGraph& g) {
  SplitMix64 rng(0xdead2024u);
  return random_row_feasible_demands(rng, g, 12);
}

void bm_maximal_independent_sets(benchmark::State& state) {
  ConflictGraph g = seeded_graph(static_cast<int>(state.range(0)), 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_independent_sets(g));
  }
}
BENCHMARK(bm_maximal_independent_sets)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void bm_minimum_duration(benchmark::State& state) {
  ConflictGraph g = seeded_graph(static_cast<int>(state.range(0)), 30);
  DemandVector tau = seeded_demands(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimum_duration(g, tau).t_star);
  }
}
BENCHMARK(bm_minimum_duration)->Arg(8)->Arg(12)->Arg(16);

void bm_check_row(benchmark::State& state) {
  ConflictGraph g = seeded_graph(static_cast<int>(state.range(0)), 30);
  DemandVector tau = seeded_demands(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_row(g, tau, 1).admitted);
  }
}
BENCHMARK(bm_check_row)->Arg(12)->Arg(20);

void bm_check_mixed(benchmark::State& state) {
  ConflictGraph g = seeded_graph(static_cast<int>(state.range(0)), 30);
  DemandVector tau = seeded_demands(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_mixed(g, tau, 1).admitted);
  }
}
BENCHMARK(bm_check_mixed)->Arg(12)->Arg(20);

void bm_beta_mixed_lp(benchmark::State& state) {
  ConflictGraph g = seeded_graph(static_cast<int>(state.range(0)), 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_mixed_lp(g).value);
  }
}
BENCHMARK(bm_beta_mixed_lp)->Arg(8)->Arg(12);

void bm_imperfection_ratio(benchmark::State& state) {
  ConflictGraph g = seeded_graph(static_cast<int>(state.range(0)), 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(imperfection_ratio(g).value);
  }
}
BENCHMARK(bm_imperfection_ratio)->Arg(5)->Arg(7)->Arg(9);

void bm_first_fit(benchmark::State& state) {
  ConflictGraph g = seeded_graph(static_cast<int>(state.range(0)), 30);
  DemandVector tau = seeded_demands(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_schedule_row(g, tau, 1, g.vertices()).assignments().size());
  }
}
BENCHMARK(bm_first_fit)->Arg(12)->Arg(24)->Arg(48);

void bm_line_conflict_graph(benchmark::State& state) {
  SplitMix64 rng(0x11c2024u);
  NetworkGraph net =
      random_network(rng, static_cast<int>(state.range(0)), 40, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(line_conflict_graph(net).edge_count());
  }
}
BENCHMARK(bm_line_conflict_graph)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
