// Serial reference vs OpenMP shift-OR kernel, and a short sweep.

#include <benchmark/benchmark.h>

#include <numeric>

#include "sumset/kernels.hpp"
#include "sumset/sumset_core.hpp"
#include "sumset/sweep.hpp"

namespace {

sumset::NormalForm wide_set(std::int64_t an) {
  std::vector<std::int64_t> a{0, 1, an / 3, an / 2, an - 7, an};
  return sumset::NormalForm::from_normal(a);
}

template <sumset::Kernel K>
void BM_Sumset(benchmark::State& state) {
  const auto a = wide_set(state.range(0));
  const std::int64_t s = 32;
  for (auto _ : state) benchmark::DoNotOptimize(sumset::sumset(a, s, K).card);
  state.SetItemsProcessed(state.iterations() * s * a.back());
}
BENCHMARK_TEMPLATE(BM_Sumset, sumset::Kernel::Serial)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK_TEMPLATE(BM_Sumset, sumset::Kernel::Parallel)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_Sweep(benchmark::State& state) {
  sumset::SweepOptions opt;
  opt.n_max = 4;
  opt.a_max = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sumset::run_sweep(opt).rows.size());
}
BENCHMARK(BM_Sweep)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
