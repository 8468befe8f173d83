// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tacsearch/kernels.hpp"

namespace {

using tacsearch::kernels::IdVector;

struct Data {
  std::vector<IdVector> vectors;
  std::vector<std::size_t> rows;
  std::vector<double> weights;
  IdVector query;
};

Data make(std::size_t n_vectors, std::size_t n_features, std::size_t per_vector) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n_features) - 1);
  Data d;
  auto draw = [&] {
    IdVector v;
    for (std::size_t i = 0; i < per_vector; ++i) v.push_back(pick(rng));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  for (std::size_t i = 0; i < n_vectors; ++i) d.vectors.push_back(draw());
  d.rows.resize(n_vectors);
  std::iota(d.rows.begin(), d.rows.end(), 0);
  std::uniform_real_distribution<double> w(0.0, 3.0);
  for (std::size_t i = 0; i < n_features; ++i) d.weights.push_back(w(rng));
  d.query = draw();
  return d;
}

void BM_ScoreRowsSerial(benchmark::State& state) {
  const Data d = make(static_cast<std::size_t>(state.range(0)), 4000, 60);
  std::vector<double> out;
  for (auto _ : state) {
    tacsearch::kernels::score_rows_serial(d.query, d.vectors, d.rows, d.weights, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScoreRowsOmp(benchmark::State& state) {
  const Data d = make(static_cast<std::size_t>(state.range(0)), 4000, 60);
  std::vector<double> out;
  for (auto _ : state) {
    tacsearch::kernels::score_rows_omp(d.query, d.vectors, d.rows, d.weights, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DocFreqSerial(benchmark::State& state) {
  const Data d = make(static_cast<std::size_t>(state.range(0)), 4000, 60);
  for (auto _ : state) {
    auto df = tacsearch::kernels::document_frequency_serial(d.vectors, 4000);
    benchmark::DoNotOptimize(df.data());
  }
}

void BM_DocFreqOmp(benchmark::State& state) {
  const Data d = make(static_cast<std::size_t>(state.range(0)), 4000, 60);
  for (auto _ : state) {
    auto df = tacsearch::kernels::document_frequency_omp(d.vectors, 4000);
    benchmark::DoNotOptimize(df.data());
  }
}

}  // namespace

BENCHMARK(BM_ScoreRowsSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_ScoreRowsOmp)->Arg(1000)->Arg(10000);
BENCHMARK(BM_DocFreqSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_DocFreqOmp)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
