#include <benchmark/benchmark.h>

#include "epiconj/linear.hpp"
#include "epiconj/mealy.hpp"
#include "epiconj/semigroup.hpp"
#include "epiconj/transform.hpp"

namespace {

using namespace epiconj;

void BM_EnumeratePT3(benchmark::State& state) {
  for (auto _ : state) {
    auto es = transform::enumerate(transform::Family::PT, 3);
    benchmark::DoNotOptimize(es.semigroup.size());
  }
}
BENCHMARK(BM_EnumeratePT3);

void BM_EnumeratePT4(benchmark::State& state) {
  for (auto _ : state) {
    auto es = transform::enumerate(transform::Family::PT, 4);
    benchmark::DoNotOptimize(es.semigroup.size());
  }
}
BENCHMARK(BM_EnumeratePT4);

void BM_GreenPT3(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    auto es = transform::enumerate(transform::Family::PT, 3);
    state.ResumeTiming();
    benchmark::DoNotOptimize(es.semigroup.green().d_count);
  }
}
BENCHMARK(BM_GreenPT3);

void BM_OraclePT3(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    auto es = transform::enumerate(transform::Family::PT, 3);
    state.ResumeTiming();
    benchmark::DoNotOptimize(es.semigroup.conjugacy().classes.count());
  }
}
BENCHMARK(BM_OraclePT3);

void BM_OraclePT4(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    auto es = transform::enumerate(transform::Family::PT, 4);
    state.ResumeTiming();
    benchmark::DoNotOptimize(es.semigroup.conjugacy().classes.count());
  }
}
BENCHMARK(BM_OraclePT4);

void BM_WitnessSearchIS3(benchmark::State& state) {
  auto es = transform::enumerate(transform::Family::IS, 3);
  const auto& s = es.semigroup;
  // a pair of conjugate 2-cycles
  const ElementIndex a = es.index_of(transform::PartialTransformation::parse("[2,1,0]"));
  const ElementIndex b = es.index_of(transform::PartialTransformation::parse("[0,3,2]"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.witness_search(a, b));
  }
}
BENCHMARK(BM_WitnessSearchIS3);

void BM_EnumeratePAutF2_3(benchmark::State& state) {
  for (auto _ : state) {
    auto es = linear::enumerate_linear(linear::Family::PAut, 3, 2);
    benchmark::DoNotOptimize(es.semigroup.size());
  }
}
BENCHMARK(BM_EnumeratePAutF2_3);

void BM_GlConjugatePAutF2_2(benchmark::State& state) {
  auto es = linear::enumerate_linear(linear::Family::PAut, 2, 2);
  const auto& f = es.elements[3];
  const auto& g = es.elements[11];
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear::conjugate_paut(f, g));
  }
}
BENCHMARK(BM_GlConjugatePAutF2_2);

void BM_OrbitReportLength14(benchmark::State& state) {
  const auto machine = mealy::appendix_a_machine();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mealy::orbit_report(machine, 14).max_chain());
  }
}
BENCHMARK(BM_OrbitReportLength14);

void BM_OrbitReportLength18(benchmark::State& state) {
  const auto machine = mealy::appendix_a_machine();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mealy::orbit_report(machine, 18).max_chain());
  }
}
BENCHMARK(BM_OrbitReportLength18);

}  // namespace

BENCHMARK_MAIN();
