#include <benchmark/benchmark.h>

#include "etheta/claims.hpp"
#include "etheta/engine.hpp"
#include "etheta/enumerate.hpp"
#include "etheta/operators.hpp"

using namespace etheta;

namespace {

FiniteSpace seven_open_space() {
  return FiniteSpace::validate(
      {"a", "b", "c", "d"},
      SetFamily(4, {PointSet(0b0000), PointSet(0b0001), PointSet(0b0100), PointSet(0b0101),
                    PointSet(0b1100), PointSet(0b1101), PointSet(0b1111)}));
}

void BM_EnumerateTopologies(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_topologies(n));
  state.counters["spaces"] = double(count_topologies(n));
}
BENCHMARK(BM_EnumerateTopologies)->Arg(3)->Arg(4)->Arg(5);

void BM_OperatorTableBuild(benchmark::State& state) {
  const FiniteSpace s = seven_open_space();
  for (auto _ : state) {
    OperatorTable t(s);
    benchmark::DoNotOptimize(t.family(FamilyKind::EstarThetaOpen).size());
  }
}
BENCHMARK(BM_OperatorTableBuild);

void BM_OperatorTableBuildWide(benchmark::State& state) {
  // 8-point carrier: the product of the worked space with a 2-chain.
  const FiniteSpace s = product(seven_open_space(),
                                FiniteSpace::generate({"0", "1"}, SetFamily(2, {PointSet(1)})));
  for (auto _ : state) {
    OperatorTable t(s);
    benchmark::DoNotOptimize(t.apply(OperatorKind::EstarClTheta, PointSet(0x55)).bits);
  }
}
BENCHMARK(BM_OperatorTableBuildWide);

void BM_ClaimKapanis(benchmark::State& state) {
  ClaimBounds b;
  b.max_points = int(state.range(0));
  b.max_map_points = 1;
  b.workers = 1;
  for (auto _ : state) {
    Universe u;
    benchmark::DoNotOptimize(run_claim("T2.8-kapanis", b, u).report->total);
  }
}
BENCHMARK(BM_ClaimKapanis)->Arg(3)->Arg(4);

void BM_OpenQuestionSearch(benchmark::State& state) {
  ClaimBounds b;
  b.max_points = int(state.range(0));
  b.max_map_points = int(state.range(0));
  b.workers = 1;
  for (auto _ : state) {
    Universe u;
    benchmark::DoNotOptimize(search_question(b, u).report->total);
  }
}
BENCHMARK(BM_OpenQuestionSearch)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
