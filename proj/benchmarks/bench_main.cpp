#include <benchmark/benchmark.h>

#include "cayleylab/aut.hpp"
#include "cayleylab/cayley.hpp"
#include "cayleylab/structured.hpp"

namespace {

using namespace cayleylab;

const char* const kFamilies[] = {"complete", "star", "path", "cycle"};

void BM_BuildCayley(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cayley(n, generator_preset(n, "complete")));
  }
}
BENCHMARK(BM_BuildCayley)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_DistancePartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CayleyGraph x = build_cayley(n, generator_preset(n, "complete"));
  VertexId root = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_partition(x, root));
    root = (root + 1) % x.vertex_count();
  }
}
BENCHMARK(BM_DistancePartition)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

// range(1) indexes kFamilies.
void BM_AutomorphismGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const char* family = kFamilies[state.range(1)];
  const CayleyGraph x = build_cayley(n, generator_preset(n, family));
  const SearchOptions options{default_element_cap(), static_cast<int>(state.range(2))};
  std::uint64_t order = 0;
  for (auto _ : state) {
    order = automorphism_group(x, options).order();
    benchmark::DoNotOptimize(order);
  }
  state.SetLabel(std::string(family) + " |Aut|=" + std::to_string(order));
}
BENCHMARK(BM_AutomorphismGroup)
    ->ArgsProduct({{4, 5}, {0, 1, 2, 3}, {1}})
    ->Args({5, 0, 4})
    ->Unit(benchmark::kMillisecond);

void BM_LittleGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CayleyGraph x = build_cayley(n, generator_preset(n, "complete"));
  for (auto _ : state) benchmark::DoNotOptimize(little_group(x).order());
}
BENCHMARK(BM_LittleGroup)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_StructuredClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CayleyGraph x = build_cayley(n, generator_preset(n, "complete"));
  for (auto _ : state) benchmark::DoNotOptimize(build_structured_group(x).group.order());
}
BENCHMARK(BM_StructuredClosure)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ClosureRightRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CayleyGraph x = build_cayley(n, generator_preset(n, "complete"));
  std::vector<VertexMap> gens;
  for (const auto& t : x.generators()) gens.push_back(right_translation(x, t));
  for (auto _ : state) benchmark::DoNotOptimize(closure(gens, x.vertex_count()).order());
}
BENCHMARK(BM_ClosureRightRegular)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
