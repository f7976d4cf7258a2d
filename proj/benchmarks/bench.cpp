#include <benchmark/benchmark.h>

#include <cstdint>

#include "gentle/bq_io.hpp"
#include "gentle/families.hpp"
#include "gentle/generator.hpp"
#include "gentle/invariant.hpp"
#include "gentle/sweep.hpp"
#include "gentle/transforms.hpp"

namespace {

using namespace gentle;

void BM_derived_invariant_lambda0(benchmark::State& state) {
  const std::size_t p = static_cast<std::size_t>(state.range(0));
  BoundQuiver bq = lambda0(p, static_cast<long>(p / 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(derived_invariant(bq));
  }
}
BENCHMARK(BM_derived_invariant_lambda0)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_derived_invariant_lambda1(benchmark::State& state) {
  const std::size_t p = static_cast<std::size_t>(state.range(0));
  BoundQuiver bq = lambda1(p, p, p, p, p / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(derived_invariant(bq));
  }
}
BENCHMARK(BM_derived_invariant_lambda1)->Arg(2)->Arg(4)->Arg(8);

void BM_derived_invariant_generated(benchmark::State& state) {
  const std::size_t arrows = static_cast<std::size_t>(state.range(0));
  BoundQuiver bq = random_gentle(7, arrows);
  for (auto _ : state) {
    benchmark::DoNotOptimize(derived_invariant(bq));
  }
}
BENCHMARK(BM_derived_invariant_generated)->Arg(4)->Arg(8)->Arg(16);

void BM_reflect_all_vertices(benchmark::State& state) {
  BoundQuiver bq = lambda0(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    for (const VertexName& v : bq.quiver().vertices()) {
      if (reflection_applicable(bq, v)) benchmark::DoNotOptimize(reflect(bq, v));
    }
  }
}
BENCHMARK(BM_reflect_all_vertices)->Arg(4)->Arg(8)->Arg(16);

void BM_extension_pipeline(benchmark::State& state) {
  const std::size_t p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extension_pipeline(p, static_cast<long>(p) - 1));
  }
}
BENCHMARK(BM_extension_pipeline)->Arg(2)->Arg(4)->Arg(6);

void BM_isomorphism_hit(benchmark::State& state) {
  const std::size_t p = static_cast<std::size_t>(state.range(0));
  BoundQuiver a = lambda0(p, 0);
  BoundQuiver b = lambda0(p, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_isomorphic(a, b));
  }
}
BENCHMARK(BM_isomorphism_hit)->Arg(4)->Arg(8);

void BM_round_trip(benchmark::State& state) {
  BoundQuiver bq = random_gentle(11, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(read_bq_string(write_bq_string(bq)));
  }
}
BENCHMARK(BM_round_trip)->Arg(8)->Arg(16);

void BM_sweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(static_cast<std::size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_sweep)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
