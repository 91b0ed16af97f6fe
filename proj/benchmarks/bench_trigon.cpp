#include <benchmark/benchmark.h>

#include "trigon/faces.hpp"
#include "trigon/geometry.hpp"
#include "trigon/search.hpp"
#include "trigon/wiring.hpp"

using namespace trigon;

namespace {

WiringDiagram nine_wire_witness() {
  return WiringDiagram::from_columns(
      9, {Column{1, 3, 5, 7}, Column{2}, Column{1, 3}, Column{4},
          Column{3, 5}, Column{6}, Column{5, 7}, Column{4, 8},
          Column{3, 5, 7}, Column{2, 6}, Column{1, 3, 5, 7}, Column{4},
          Column{3, 5}, Column{2, 6}, Column{1, 3, 5, 7}, Column{4},
          Column{3, 5}});
}

void BM_exhaustive_search(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.exhaustive = true;
  unsigned long long nodes = 0;
  for (auto _ : state) {
    const SearchResult r = depth_first_search(cfg);
    benchmark::DoNotOptimize(r.best_count);
    nodes = r.nodes_visited;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_exhaustive_search)->Arg(5)->Arg(6)->Arg(7)->Unit(
    benchmark::kMillisecond);

void BM_count_triangles(benchmark::State& state) {
  const WiringDiagram d = nine_wire_witness();
  for (auto _ : state) {
    const FaceReport r = count_triangles(d);
    benchmark::DoNotOptimize(r.triangle_count);
  }
}
BENCHMARK(BM_count_triangles);

void BM_partial_report(benchmark::State& state) {
  const WiringDiagram d = nine_wire_witness();
  for (auto _ : state) {
    const PartialReport r = partial_report(d);
    benchmark::DoNotOptimize(r.provably_unused);
  }
}
BENCHMARK(BM_partial_report);

void BM_enumerate_children(benchmark::State& state) {
  const WiringDiagram d = new_diagram(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto kids = enumerate_children(d);
    benchmark::DoNotOptimize(kids.size());
  }
}
BENCHMARK(BM_enumerate_children)->Arg(9)->Arg(15);

void BM_hexagonal_seed(benchmark::State& state) {
  for (auto _ : state) {
    const LineArrangement a = hexagonal7();
    benchmark::DoNotOptimize(a.precision);
  }
}
BENCHMARK(BM_hexagonal_seed)->Unit(benchmark::kMillisecond);

void BM_seed_to_wiring(benchmark::State& state) {
  const LineArrangement a = hexagonal7();
  for (auto _ : state) {
    const WiringDiagram d = to_wiring(a);
    benchmark::DoNotOptimize(d.n());
  }
}
BENCHMARK(BM_seed_to_wiring)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
