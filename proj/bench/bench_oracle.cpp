// Serial reference kernels against their OpenMP counterparts.

#include "dergraph/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace dergraph::oracle;

void BM_BuildGraph_Serial(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::build_graph(static_cast<int>(state.range(0))));
}

void BM_BuildGraph_Parallel(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(build_graph(static_cast<int>(state.range(0))));
}

struct Fixture {
  CayleyGraph graph;
  BfsResult bfs;
  DistanceMatrix distances;

  explicit Fixture(int n) : graph(build_graph(n)), bfs(bfs_distances(graph)), distances(distance_matrix(graph, bfs)) {}
};

const Fixture& fixture(int n)
{
  static Fixture f6(6), f7(7);
  return n == 6 ? f6 : f7;
}

void BM_DistanceMatrix_Serial(benchmark::State& state)
{
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::distance_matrix(f.graph, f.bfs));
}

void BM_DistanceMatrix_Parallel(benchmark::State& state)
{
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(distance_matrix(f.graph, f.bfs));
}

void BM_TracePower_Serial(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  const Fixture& f = fixture(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::trace_power(f.distances, n, 3));
}

void BM_TracePower_Parallel(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  const Fixture& f = fixture(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(trace_power(f.distances, n, 3));
}

void BM_CertifyAll_Serial(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::certify_all(static_cast<int>(state.range(0))));
}

void BM_CertifyAll_Parallel(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_all(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_BuildGraph_Serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraph_Parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceMatrix_Serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceMatrix_Parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TracePower_Serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TracePower_Parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyAll_Serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyAll_Parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
