// Copyright 2026 The mmes Authors
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

#include <random>

#include "mmes/criterion.h"
#include "mmes/invariants.h"
#include "mmes/optimizer.h"
#include "mmes/sampling.h"

namespace {

using namespace mmes;

void BM_AvgSubsystemPurity(benchmark::State &state) {
    auto rng = make_rng(1);
    auto psi = haar_random_state(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avg_subsystem_purity(psi));
    }
}
BENCHMARK(BM_AvgSubsystemPurity)->DenseRange(4, 12, 2);

void BM_InvariantTable(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    auto rng = make_rng(2);
    auto psi = haar_random_state(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invariant_table(psi, n / 2));
    }
}
BENCHMARK(BM_InvariantTable)->DenseRange(4, 8, 2);

void BM_ExactDecomposition(benchmark::State &state) {
    auto rng = make_rng(3);
    auto psi = haar_random_state(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_decomposition(psi));
    }
}
BENCHMARK(BM_ExactDecomposition)->Arg(6)->Arg(8);

void BM_ObjectiveGradient(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    PurityObjective f(n);
    auto rng = make_rng(4);
    std::normal_distribution<double> normal;
    std::vector<double> x(f.num_params()), g(f.num_params());
    for (auto &v : x) {
        v = normal(rng);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.value_and_gradient(x, g));
    }
}
BENCHMARK(BM_ObjectiveGradient)->DenseRange(4, 10, 1);

void BM_MinimizeSingleRestart(benchmark::State &state) {
    OptimizerConfig config;
    config.n = static_cast<int>(state.range(0));
    config.restarts = 1;
    config.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize(config).pi_me);
    }
}
BENCHMARK(BM_MinimizeSingleRestart)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
