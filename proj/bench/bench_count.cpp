#include <benchmark/benchmark.h>

#include "asmax/oracle.hpp"

using namespace asmax;

namespace {

DOCurve curve(std::uint32_t p0) {
  CurveSpec spec;
  spec.p0 = p0;
  spec.R = {CoeffSpec::integer(1), CoeffSpec::integer(2)};
  return do_curve(resolve(spec));
}

void BM_Serial(benchmark::State& state) {
  const DOCurve c = curve(static_cast<std::uint32_t>(state.range(0)));
  const int deg = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_affine_serial(c, deg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(make_field(c.field->p0(), deg)->order()));
}

void BM_Parallel(benchmark::State& state) {
  const DOCurve c = curve(static_cast<std::uint32_t>(state.range(0)));
  const int deg = static_cast<int>(state.range(1));
  OracleOptions opt;
  opt.threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(count_affine(c, deg, opt));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(make_field(c.field->p0(), deg)->order()));
}

}  // namespace

BENCHMARK(BM_Serial)->Args({3, 10})->Args({3, 12})->Args({5, 8})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)
    ->ArgsProduct({{3}, {10, 12}, {1, 4, 0}})
    ->Args({5, 8, 1})
    ->Args({5, 8, 0})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
