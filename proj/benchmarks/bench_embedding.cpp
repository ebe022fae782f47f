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

#include "pdqubo/embedding.hpp"
#include "pdqubo/sampler.hpp"
#include "pdqubo/wasserstein.hpp"

namespace {

using namespace pdqubo;

void BM_ChimeraConstruction(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chimera(size, size, 4));
    }
}
BENCHMARK(BM_ChimeraConstruction)->Arg(4)->Arg(16);

void BM_FindEmbedding(benchmark::State& state) {
    // Embed the m = n = <arg> compiled instance into a 4x4 Chimera.
    std::mt19937_64 rng(5);
    const auto points = static_cast<std::size_t>(state.range(0));
    PersistenceDiagram X, Y;
    for (std::size_t i = 0; i < points; ++i) {
        const double b = rng::uniform_01(rng) * 0.5;
        X.points.push_back({rational_from_double(b), rational_from_double(b + 0.4)});
        const double c = rng::uniform_01(rng) * 0.5;
        Y.points.push_back({rational_from_double(c), rational_from_double(c + 0.3)});
    }
    const WassersteinGraph graph = build_wasserstein_graph(X, Y, 2, 2);
    const LogicalGraph logical = logical_graph(compile_qubo(graph, default_gamma(graph)).model);
    const HardwareGraph hardware = chimera(4, 4, 4);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_embedding(logical, hardware, seed++));
    }
}
BENCHMARK(BM_FindEmbedding)->Arg(2)->Arg(3);

}  // namespace
