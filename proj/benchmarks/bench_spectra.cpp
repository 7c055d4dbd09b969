#include <benchmark/benchmark.h>

#include "lmg/fock.hpp"
#include "lmg/spectra.hpp"
#include "lmg/tridiagonal.hpp"

namespace {

void BM_TridiagonalEigenvalues(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<double> diag(n), off2(n - 1);
  for (int i = 0; i < n; ++i) diag[i] = n - 2.0 * i;
  for (int i = 0; i + 1 < n; ++i) off2[i] = 0.5 + 0.1 * i;
  for (auto _ : state) {
    auto ev = lmg::tridiagonal::eigenvalues(diag, off2, 1e-12);
    benchmark::DoNotOptimize(ev);
  }
}
BENCHMARK(BM_TridiagonalEigenvalues)->Arg(8)->Arg(32)->Arg(128);

void BM_FullSpectrum(benchmark::State& state) {
  lmg::ModelParams p{static_cast<int>(state.range(0)), 1.0, 1.0};
  for (auto _ : state) {
    auto s = lmg::spectra::full_spectrum(p);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_FullSpectrum)->Arg(8)->Arg(16)->Arg(32);

void BM_BruteForceSpectrum(benchmark::State& state) {
  lmg::ModelParams p{static_cast<int>(state.range(0)), 1.0, 1.0};
  for (auto _ : state) {
    auto s = lmg::fock::brute_force_spectrum(p);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BruteForceSpectrum)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
