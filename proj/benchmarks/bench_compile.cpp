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

#include "pdqubo/oracle.hpp"
#include "pdqubo/sampler.hpp"
#include "pdqubo/wasserstein.hpp"

namespace {

using namespace pdqubo;

PersistenceDiagram random_diagram(std::mt19937_64& rng, std::size_t points) {
    PersistenceDiagram diagram;
    for (std::size_t i = 0; i < points; ++i) {
        for (;;) {
            const double b = rng::uniform_01(rng);
            const double d = rng::uniform_01(rng);
            if (d > b) {
                diagram.points.push_back({rational_from_double(b), rational_from_double(d)});
                break;
            }
        }
    }
    return diagram;
}

void BM_CompileQubo(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto points = static_cast<std::size_t>(state.range(0));
    const PersistenceDiagram X = random_diagram(rng, points);
    const PersistenceDiagram Y = random_diagram(rng, points);
    for (auto _ : state) {
        const WassersteinGraph graph = build_wasserstein_graph(X, Y, 2, 2);
        benchmark::DoNotOptimize(compile_qubo(graph, default_gamma(graph)));
    }
}
BENCHMARK(BM_CompileQubo)->Arg(4)->Arg(16)->Arg(64);

void BM_HungarianOracle(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto points = static_cast<std::size_t>(state.range(0));
    const PersistenceDiagram X = random_diagram(rng, points);
    const PersistenceDiagram Y = random_diagram(rng, points);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hungarian_distance(X, Y, 2, 2));
    }
}
BENCHMARK(BM_HungarianOracle)->Arg(8)->Arg(32)->Arg(128);

void BM_BruteForceOracle(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto points = static_cast<std::size_t>(state.range(0));
    const PersistenceDiagram X = random_diagram(rng, points);
    const PersistenceDiagram Y = random_diagram(rng, points);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_distance(X, Y, 2, 2));
    }
}
BENCHMARK(BM_BruteForceOracle)->Arg(2)->Arg(4);

}  // namespace
