#include <benchmark/benchmark.h>

#include "critmech/criticality.hpp"
#include "critmech/oracle/dicke.hpp"
#include "critmech/oracle/eigensolve.hpp"
#include "critmech/oracle/sector.hpp"
#include "critmech/oracle/symplectic.hpp"
#include "critmech/sweep/presets.hpp"

using namespace critmech;

static void BM_AnalyticSpectrumAndCouplings(benchmark::State& state) {
  double mu = 0.1;
  for (auto _ : state) {
    const auto s = polariton_frequencies(1.0, 4.0, mu);
    benchmark::DoNotOptimize(optomech_couplings(1.0, 1.0, s));
    mu = mu > 0.9 ? 0.1 : mu + 1e-3;
  }
}
BENCHMARK(BM_AnalyticSpectrumAndCouplings);

static void BM_SymplecticFrame(benchmark::State& state) {
  const auto precision = state.range(0) == 0 ? oracle::Precision::Double : oracle::Precision::Extended;
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::superradiant_frame_modes(1.0, 4.0, 0.64, precision));
  state.SetLabel(state.range(0) == 0 ? "double" : "extended");
}
BENCHMARK(BM_SymplecticFrame)->Arg(0)->Arg(1);

// Even-parity sector of the Dicke Hamiltonian at phonon cutoff 80.
static void BM_DickeSectorEigensolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sector = oracle::dicke_parity_sector(oracle::build_space({80}, n), {1.0, 4.0, 1.25}, +1);
  oracle::EigensolveOptions opts;
  opts.compute_vectors = false;
  opts.check_residuals = false;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::hermitian_eigensolve(sector.hamiltonian, opts));
  state.counters["dimension"] = static_cast<double>(sector.basis.size());
}
BENCHMARK(BM_DickeSectorEigensolve)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_KerrSector(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::optomech_sector_spectrum(3, 5.0, 1.0, 0.5, 60));
}
BENCHMARK(BM_KerrSector);

static void BM_Fig3Sweep(benchmark::State& state) {
  const bool oracle_check = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(sweep::fig3_dataset(10.0, oracle_check));
  state.SetLabel(oracle_check ? "with oracle" : "analytic only");
}
BENCHMARK(BM_Fig3Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
