// Copyright 2026 The hecke-topo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "hecke/derived.hpp"
#include "hecke/modforms.hpp"
#include "hecke/qseries.hpp"

namespace {

hecke::IntSeries operand(std::size_t n) {
  return hecke::delta_integral(n);
}

void BM_MulNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = operand(n), b = hecke::e4_integral(n);
  for (auto _ : state) benchmark::DoNotOptimize(hecke::mul_naive(a, b, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulNaive)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

void BM_MulKaratsuba(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = operand(n), b = hecke::e4_integral(n);
  for (auto _ : state) benchmark::DoNotOptimize(hecke::mul_truncated(a, b, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulKaratsuba)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

// Cold: no disk cache and both memory caches dropped each iteration.
void BM_HeckeMatrixCold(benchmark::State& state) {
  hecke::set_cache_directory(std::nullopt);
  const long k = state.range(0);
  for (auto _ : state) {
    hecke::clear_memory_caches();
    benchmark::DoNotOptimize(hecke::hecke_matrix(k, 13));
  }
}
BENCHMARK(BM_HeckeMatrixCold)->Arg(12)->Arg(24)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_ClassOrder(benchmark::State& state) {
  hecke::set_cache_directory(std::nullopt);
  const long p = state.range(0), n = state.range(1);
  for (auto _ : state) {
    hecke::clear_memory_caches();
    hecke::CommutatorContext ctx(p, n);
    benchmark::DoNotOptimize(hecke::class_order(ctx, 12, {2, 3, 7, 11, 13}));
  }
}
BENCHMARK(BM_ClassOrder)->Args({5, 1})->Args({5, 5})->Args({5, 10})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
