// Serial vs OpenMP timings of the exact linear-algebra kernels.
#include <random>

#include <benchmark/benchmark.h>

#include "hopfkit/corad.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/zoo.hpp"

using namespace hopfkit;

namespace {

std::vector<SparseVec> random_rows(std::size_t rows, std::size_t cols, std::size_t per_row) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> col(0, cols - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t k = 0; k < per_row; ++k) e.emplace_back(col(rng), Scalar(coeff(rng)));
    out.push_back(SparseVec::from_entries(std::move(e)));
  }
  return out;
}

void BM_rref(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rows = random_rows(n, n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(rref(rows, exec));
}

void BM_truncation_B(benchmark::State& state, Exec exec) {
  const HopfPresentation B = build_B(1);
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Truncation T(B, D, exec);
    benchmark::DoNotOptimize(T.reduced_delta_of(T.dim() - 1));
  }
}

void BM_coradical_B(benchmark::State& state, Exec exec) {
  const HopfPresentation B = build_B(1);
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coradical_filtration(B, D / 2, D, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_rref, serial, Exec::serial)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rref, parallel, Exec::parallel)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_truncation_B, serial, Exec::serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_truncation_B, parallel, Exec::parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_coradical_B, serial, Exec::serial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_coradical_B, parallel, Exec::parallel)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
