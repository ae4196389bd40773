#include <benchmark/benchmark.h>

#include "dsc/boosting.hpp"
#include "dsc/compression.hpp"
#include "dsc/constructions.hpp"
#include "dsc/dimensions.hpp"
#include "dsc/lowerbound.hpp"

namespace {

using namespace dsc;

void BM_DimensionParallel(benchmark::State& state) {
  auto cls = unique_label_disambiguation(biclique_class(star_partition(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(dimension(cls, ShatterKind::Graph).dimension);
}
void BM_DimensionSerial(benchmark::State& state) {
  auto cls = unique_label_disambiguation(biclique_class(star_partition(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(serial::dimension(cls, ShatterKind::Graph).dimension);
}
BENCHMARK(BM_DimensionParallel)->Arg(6)->Arg(9);
BENCHMARK(BM_DimensionSerial)->Arg(6)->Arg(9);

void BM_VerifyParallel(benchmark::State& state) {
  auto cls = haussler_long(4, 2, 1);
  auto scheme = boosted_scheme(cls, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_scheme(cls, scheme, static_cast<std::size_t>(state.range(0))).k_of_m);
}
void BM_VerifySerial(benchmark::State& state) {
  auto cls = haussler_long(4, 2, 1);
  auto scheme = boosted_scheme(cls, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::verify_scheme(cls, scheme, static_cast<std::size_t>(state.range(0))).k_of_m);
}
BENCHMARK(BM_VerifyParallel)->Arg(4)->Arg(6);
BENCHMARK(BM_VerifySerial)->Arg(4)->Arg(6);

void BM_ChromaticParallel(benchmark::State& state) {
  auto g = Graph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
void BM_ChromaticSerial(benchmark::State& state) {
  auto g = Graph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::chromatic_number(g));
}
BENCHMARK(BM_ChromaticParallel)->Arg(7)->Arg(9);
BENCHMARK(BM_ChromaticSerial)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
