#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "qbarrier/closed_form.hpp"
#include "qbarrier/linear_solver.hpp"
#include "qbarrier/ode_oracle.hpp"
#include "qbarrier/resonance.hpp"
#include "qbarrier/sampling.hpp"

using namespace qbarrier;

namespace {

const std::vector<GridPoint>& points() {
  static const auto grid = random_grid(256, 7);
  return grid;
}

template <Precision P>
void BM_ClosedForm(benchmark::State& state) {
  const auto& grid = points();
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& p = grid[k++ % grid.size()];
    benchmark::DoNotOptimize(transmission(p.eps, p.barrier, P));
  }
}
BENCHMARK(BM_ClosedForm<Precision::binary64>)->Name("closed_form/binary64");
BENCHMARK(BM_ClosedForm<Precision::binary128>)->Name("closed_form/binary128");

void BM_LinearSolver(benchmark::State& state) {
  const auto& grid = points();
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& p = grid[k++ % grid.size()];
    benchmark::DoNotOptimize(solve(p.eps, p.barrier));
  }
}
BENCHMARK(BM_LinearSolver);

void BM_Oracle(benchmark::State& state) {
  const auto& grid = points();
  OracleOptions opts;
  opts.steps = static_cast<int>(state.range(0));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& p = grid[k++ % grid.size()];
    benchmark::DoNotOptimize(oracle_amplitudes(p.eps, p.barrier, opts));
  }
}
BENCHMARK(BM_Oracle)->Arg(1000)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_EnergyScan(benchmark::State& state) {
  const double l0 = 3.0 * std::numbers::pi;
  const AdimensionalBarrier b{0.5, std::sqrt(0.75), 0.0, l0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_peaks(b, ScanVariable::energy, l0, 1.0, 1.5));
  }
}
BENCHMARK(BM_EnergyScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
