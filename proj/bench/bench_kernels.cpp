// Copyright 2026 The bayescite Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts. Run with
// OMP_NUM_THREADS set to compare thread counts; the outputs are identical either way.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "bayescite/kernels.hpp"

namespace {

using namespace bayescite;
namespace k = bayescite::kernels;

// A wide histogram: every value 0..n-1 present, weights tapering off.
CountHistogram wide_histogram(std::size_t bins) {
  CountHistogram h;
  for (std::size_t i = 0; i < bins; ++i) {
    h.values.push_back(static_cast<Count>(i));
    h.weights.push_back(1.0 + 1000.0 / (1.0 + static_cast<double>(i)));
  }
  return h;
}

template <auto Fn>
void BM_NbSums(benchmark::State& state) {
  const CountHistogram h = wide_histogram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(h, 1.7, k::NbOrder::kHessian));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_ScoreGrid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  std::vector<double> t(side);
  std::vector<Count> x(side);
  std::iota(t.begin(), t.end(), 0.0);
  std::iota(x.begin(), x.end(), Count{0});
  const GammaPrior prior(0.9, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(prior, 1.0, t, x));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <auto Fn>
void BM_ScoreBatch(benchmark::State& state) {
  std::vector<k::ScoreInput> in;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    in.push_back({0.5 + static_cast<double>(i % 7), 0.1 + static_cast<double>(i % 5),
                  static_cast<Count>(i % 300), static_cast<double>(i % 11)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(Fn(in, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_DrawNegbin(benchmark::State& state) {
  const GammaPrior prior(0.9, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(prior, static_cast<std::size_t>(state.range(0)), 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_NbSums<k::serial::nb_sums>)->Name("nb_sums/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_NbSums<k::nb_sums>)->Name("nb_sums/omp")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_ScoreGrid<k::serial::score_grid>)->Name("score_grid/serial")->Range(64, 1024);
BENCHMARK(BM_ScoreGrid<k::score_grid>)->Name("score_grid/omp")->Range(64, 1024);
BENCHMARK(BM_ScoreBatch<k::serial::score_batch>)->Name("score_batch/serial")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_ScoreBatch<k::score_batch>)->Name("score_batch/omp")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_DrawNegbin<k::serial::draw_negbin>)->Name("draw_negbin/serial")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_DrawNegbin<k::draw_negbin>)->Name("draw_negbin/omp")->Range(1 << 12, 1 << 18);

}  // namespace

BENCHMARK_MAIN();
