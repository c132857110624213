#include <benchmark/benchmark.h>

#include "dessins/character_table.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/finite_field.hpp"
#include "dessins/moebius.hpp"
#include "dessins/psl2.hpp"

using namespace dessins;

static void BM_SchreierSimsAlternating(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PermGroup g = PermGroup::alternating(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsAlternating)->Arg(8)->Arg(15)->Arg(30);

static void BM_CensusTwoSevenFaces(benchmark::State& state) {
  const auto workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_two_seven_faces(workers).dessins.size());
}
BENCHMARK(BM_CensusTwoSevenFaces)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DixonPsl2(benchmark::State& state) {
  const FField f(static_cast<std::uint32_t>(state.range(0)), 1);
  const auto cs = conjugacy_classes(psl2_group(f));
  for (auto _ : state) benchmark::DoNotOptimize(dixon_table(cs).size());
}
BENCHMARK(BM_DixonPsl2)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_MobiusTablePsl2_13(benchmark::State& state) {
  const SubgroupLattice lat(psl2_group(FField(13, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(mobius_table(lat, {3, 2, 7}).phi);
}
BENCHMARK(BM_MobiusTablePsl2_13)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
