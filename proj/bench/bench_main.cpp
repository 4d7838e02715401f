#include <benchmark/benchmark.h>

#include "oml/checker.hpp"
#include "oml/enumerate.hpp"
#include "oml/greechie.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace oml;

namespace {

const OrthoModel& big_oml() {
  static const OrthoModel m = [] {
    auto battery = greechie_oml_battery(9, 3);
    return battery.back().model;
  }();
  return m;
}

// Passes everywhere, so every valuation is visited.
const Condition& sym_distrib() {
  static const Condition c = parse_condition(
      "(((a^b)v(-a^-b))^(((b^c)v(-b^-c))v((a^c)v(-a^-c)))) = "
      "((((a^b)v(-a^-b))^((b^c)v(-b^-c)))v(((a^b)v(-a^-b))^((a^c)v(-a^-c))))");
  return c;
}

void set_threads(const benchmark::State& state) {
#ifdef _OPENMP
  omp_set_num_threads(static_cast<int>(state.range(0)));
#else
  (void)state;
#endif
}

void BM_CheckSerial(benchmark::State& state) {
  ModelOps ops(big_oml());
  for (auto _ : state) benchmark::DoNotOptimize(serial::check_horn(ops, sym_distrib()));
}
BENCHMARK(BM_CheckSerial)->Unit(benchmark::kMillisecond);

void BM_CheckParallel(benchmark::State& state) {
  set_threads(state);
  ModelOps ops(big_oml());
  for (auto _ : state) benchmark::DoNotOptimize(check_horn(ops, sym_distrib()));
}
BENCHMARK(BM_CheckParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ScanSerial(benchmark::State& state) {
  OrthoModel m = mo2();
  for (auto _ : state) benchmark::DoNotOptimize(serial::scan_mixed_distributivity(m));
}
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
  set_threads(state);
  OrthoModel m = mo2();
  for (auto _ : state) benchmark::DoNotOptimize(scan_mixed_distributivity(m));
}
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

SearchSpec search_spec() {
  SearchSpec spec;
  spec.v = 6;
  spec.n = 4;
  spec.opset = {OpCode::implication(0), OpCode::implication(1), OpCode::implication(2),
                OpCode::implication(3), OpCode::implication(4), OpCode::implication(5)};
  spec.target = parse("(a^b)");
  return spec;
}

void BM_EnumerateSerial(benchmark::State& state) {
  SearchSpec spec = search_spec();
  for (auto _ : state) {
    std::size_t hits = 0;
    serial::enumerate(spec, [&](const Enumerated&) { ++hits; });
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  set_threads(state);
  SearchSpec spec = search_spec();
  for (auto _ : state) {
    std::size_t hits = 0;
    enumerate(spec, [&](const Enumerated&) { ++hits; });
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
