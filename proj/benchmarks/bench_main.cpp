// Copyright 2026 The photonic-bsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numeric>

#include "bsa/infometrics.hpp"
#include "bsa/optimizer.hpp"
#include "bsa/permanent.hpp"
#include "bsa/transfer.hpp"
#include "bsa/unitary.hpp"

namespace {

void BM_Permanent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bsa::CircuitMatrix u = bsa::haar_random_unitary(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bsa::permanent(u));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Permanent)->DenseRange(4, 12, 2);

void BM_PermanentWithGradient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bsa::CircuitMatrix u = bsa::haar_random_unitary(n, 1);
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  Eigen::MatrixXcd grad;
  for (auto _ : state) benchmark::DoNotOptimize(bsa::permanent_with_gradient(u, idx, idx, grad));
}
BENCHMARK(BM_PermanentWithGradient)->DenseRange(4, 10, 2);

void BM_OutcomeTable(benchmark::State& state) {
  const int n_a = static_cast<int>(state.range(0));
  const bsa::OutcomeAlphabet alphabet(n_a);
  const bsa::CircuitMatrix u = bsa::haar_random_unitary(n_a + 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bsa::outcome_table(u, alphabet, 1));
  state.counters["outcomes"] = static_cast<double>(alphabet.size());
}
BENCHMARK(BM_OutcomeTable)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ObjectiveGradient(benchmark::State& state) {
  const int n_a = static_cast<int>(state.range(0));
  const bsa::Objective f(n_a);
  const bsa::CircuitParams p = bsa::initial_params(n_a + 4, 0.5, 3);
  Eigen::VectorXd g;
  for (auto _ : state) benchmark::DoNotOptimize(f.value_and_gradient(p, g));
}
BENCHMARK(BM_ObjectiveGradient)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CentralDifferenceGradient(benchmark::State& state) {
  const int n_a = static_cast<int>(state.range(0));
  const bsa::Objective f(n_a);
  const bsa::CircuitParams p = bsa::initial_params(n_a + 4, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(f.central_difference_gradient(p, 1e-6));
}
BENCHMARK(BM_CentralDifferenceGradient)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
