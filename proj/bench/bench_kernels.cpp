// Serial reference kernels against their OpenMP versions.
// Arg 0 selects the serial path, 1 the parallel one.
#include <benchmark/benchmark.h>

#include "lfc/audit.hpp"
#include "lfc/chain_complex.hpp"
#include "lfc/fibration.hpp"
#include "lfc/generate.hpp"
#include "lfc/homology.hpp"
#include "lfc/tower.hpp"

using namespace lfc;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

const std::shared_ptr<const Complex>& input() {
  static const auto s = std::make_shared<const Complex>(shelled_tree(3, 3, 7));
  return s;
}

const Localization& localized() {
  static const Localization loc = localize(input());
  return loc;
}

void BM_Localize(benchmark::State& state) {
  LocalizeOptions options;
  options.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(localize(input(), options));
  state.counters["simplices"] = static_cast<double>(localized().complex->size());
}

void BM_ChainComplex(benchmark::State& state) {
  const Complex& t = *localized().complex;
  for (auto _ : state) benchmark::DoNotOptimize(chain_complex(t, true, mode(state)));
}

void BM_DegreeAudit(benchmark::State& state) {
  const Complex& t = *localized().complex;
  for (auto _ : state) benchmark::DoNotOptimize(degree_audit(t, 78, 39, mode(state)));
}

void BM_Fibers(benchmark::State& state) {
  const auto& level = localized().tower.levels[2];
  const auto p = projection_map(level.complex, level.skeleton);
  for (auto _ : state) benchmark::DoNotOptimize(check_pseudofibration(p, {32, 0, mode(state)}));
}

void BM_Homology(benchmark::State& state) {
  const Complex& t = *localized().complex;
  for (auto _ : state) benchmark::DoNotOptimize(homology(t, false, Coefficients::integers(), mode(state)));
}

}  // namespace

BENCHMARK(BM_Localize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainComplex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DegreeAudit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fibers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Homology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
