// Copyright 2026 The pdqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <benchmark/benchmark.h>

#include "pdqubo/model.hpp"
#include "pdqubo/sampler.hpp"
#include "pdqubo/wasserstein.hpp"

namespace {

using namespace pdqubo;

// A representative compiled instance: m = n = 4, N = 24 variables.
CompiledQubo benchmark_instance() {
    std::mt19937_64 rng(1);
    PersistenceDiagram X, Y;
    for (int i = 0; i < 4; ++i) {
        const double b = rng::uniform_01(rng) * 0.5;
        X.points.push_back({rational_from_double(b), rational_from_double(b + 0.5)});
        const double c = rng::uniform_01(rng) * 0.5;
        Y.points.push_back({rational_from_double(c), rational_from_double(c + 0.25)});
    }
    const WassersteinGraph graph = build_wasserstein_graph(X, Y, 2, 2);
    return compile_qubo(graph, default_gamma(graph));
}

void BM_AnnealRead(benchmark::State& state) {
    const CompiledQubo compiled = benchmark_instance();
    Schedule schedule = default_forward_schedule(compiled.model);
    schedule.sweeps = state.range(0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(anneal(compiled.model, schedule, 1, seed++));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) *
                            static_cast<std::int64_t>(compiled.model.num_vars()));
}
BENCHMARK(BM_AnnealRead)->Arg(100)->Arg(1000);

void BM_MetropolisSweeps(benchmark::State& state) {
    const CompiledQubo compiled = benchmark_instance();
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(metropolis_chain(compiled.model, 2.0, state.range(0), seed++));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) *
                            static_cast<std::int64_t>(compiled.model.num_vars()));
}
BENCHMARK(BM_MetropolisSweeps)->Arg(1000);

void BM_ArgminExhaustive(benchmark::State& state) {
    // Truncate the instance to the requested variable count.
    const CompiledQubo compiled = benchmark_instance();
    const auto n = static_cast<std::size_t>(state.range(0));
    QuboModel model(n);
    for (const auto& [i, h] : compiled.model.linear_terms()) {
        if (i < n) model.add_linear(i, h);
    }
    for (const auto& [ij, j_coeff] : compiled.model.quadratic_terms()) {
        if (ij.second < n) model.add_quadratic(ij.first, ij.second, j_coeff);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(argmin_exhaustive(model));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}
BENCHMARK(BM_ArgminExhaustive)->Arg(16)->Arg(20);

}  // namespace
