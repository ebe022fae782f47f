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

#include "pdqubo/wasserstein.hpp"

#include "catch2/catch_amalgamated.hpp"
#include "pdqubo/errors.hpp"
#include "test_util.hpp"

using namespace pdqubo;

namespace {

PersistenceDiagram make_diagram(std::initializer_list<std::pair<double, double>> points) {
    PersistenceDiagram diagram;
    for (const auto& [b, d] : points) {
        diagram.points.push_back({rational_from_double(b), rational_from_double(d)});
    }
    return diagram;
}

// Independent evaluation of cost + gamma * constraint straight from the
// graph, never through QuboModel.
Rational direct_hamiltonian(const WassersteinGraph& graph, const Rational& gamma,
                            const Assignment& x) {
    Rational cost = 0;
    std::vector<long> x_degree(graph.sides.x_bar.size(), 0);
    std::vector<long> y_degree(graph.sides.y_bar.size(), 0);
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        if (!x[e]) continue;
        cost += graph.edges[e].theta;
        ++x_degree[graph.edges[e].u];
        ++y_degree[graph.edges[e].v];
    }
    long constraint = 0;
    for (std::size_t u = 0; u < graph.sides.x_bar.size(); ++u) {
        if (graph.sides.x_bar[u].is_diagonal) continue;
        constraint += (1 - x_degree[u]) * (1 - x_degree[u]);
    }
    for (std::size_t v = 0; v < graph.sides.y_bar.size(); ++v) {
        if (graph.sides.y_bar[v].is_diagonal) continue;
        constraint += (1 - y_degree[v]) * (1 - y_degree[v]);
    }
    return cost + gamma * Rational(constraint);
}

}  // namespace

TEST_CASE("edge_weight") {
    const PersistenceDiagram X = make_diagram({{0, 2}});
    const PersistenceDiagram Y1 = make_diagram({{0, 2}});
    const PersistenceDiagram Y2 = make_diagram({{1, 3}});

    SECTION("point to its own projection uses l-inf to the power p") {
        const AugmentedSides sides = augment(X, {});
        CHECK(edge_weight(sides.x_bar[0], sides.y_bar[0], 2, 2) == Rational(1));
    }
    SECTION("coincident points cost nothing") {
        const AugmentedSides sides = augment(X, Y1);
        CHECK(edge_weight(sides.x_bar[0], sides.y_bar[0], 2, 2) == Rational(0));
    }
    SECTION("off-diagonal pair uses l-q to the power p") {
        const AugmentedSides sides = augment(X, Y2);
        CHECK(edge_weight(sides.x_bar[0], sides.y_bar[0], 2, 2) == Rational(2));
    }
    SECTION("same-side pairs are structural errors") {
        const AugmentedSides sides = augment(X, Y2);
        CHECK_THROWS_AS(edge_weight(sides.x_bar[0], sides.x_bar[1], 2, 2), DomainError);
    }
    SECTION("foreign projections and diagonal pairs are not edges") {
        const PersistenceDiagram X2 = make_diagram({{0, 2}, {1, 3}});
        const AugmentedSides sides = augment(X2, Y2);
        // x_bar[0] belongs to point 0; y_bar[2] is the projection of point 1.
        CHECK_THROWS_AS(edge_weight(sides.x_bar[0], sides.y_bar[2], 2, 2), DomainError);
        // x_bar[2] (projection of y0) against y_bar[1] (projection of x0).
        CHECK_THROWS_AS(edge_weight(sides.x_bar[2], sides.y_bar[1], 2, 2), DomainError);
    }
    SECTION("q = inf uses the max norm on every edge") {
        const AugmentedSides sides = augment(X, Y2);
        CHECK(edge_weight(sides.x_bar[0], sides.y_bar[0], 1, kInfinity) == Rational(1));
        CHECK(edge_weight(sides.x_bar[0], sides.y_bar[0], 2, kInfinity) == Rational(1));
    }
    SECTION("q = 1 uses the taxicab norm") {
        const AugmentedSides sides = augment(X, Y2);
        CHECK(edge_weight(sides.x_bar[0], sides.y_bar[0], 1, 1) == Rational(2));
    }
    SECTION("invalid exponents are rejected") {
        const AugmentedSides sides = augment(X, Y2);
        CHECK_THROWS_AS(edge_weight(sides.x_bar[0], sides.y_bar[0], 0.5, 2), DomainError);
        CHECK_THROWS_AS(edge_weight(sides.x_bar[0], sides.y_bar[0], 2, 0.5), DomainError);
    }
}

TEST_CASE("build_wasserstein_graph") {
    SECTION("edge count is mn + m + n") {
        auto rng = testutil::engine(21);
        const PersistenceDiagram X = testutil::random_diagram(rng, 4, 4);
        const PersistenceDiagram Y = testutil::random_diagram(rng, 3, 3);
        const WassersteinGraph graph = build_wasserstein_graph(X, Y, 2, 2);
        CHECK(graph.num_edges() == 19);
    }
    SECTION("empty diagrams give an empty graph") {
        const WassersteinGraph graph = build_wasserstein_graph({}, {}, 2, 2);
        CHECK(graph.num_edges() == 0);
    }
    SECTION("smallest nonempty case has one edge per class") {
        const WassersteinGraph graph = build_wasserstein_graph(
                make_diagram({{0, 2}}), make_diagram({{0, 2.5}}), 2, 2);
        REQUIRE(graph.num_edges() == 3);
        CHECK(graph.edges[0].cls == EdgeClass::kE1);
        CHECK(graph.edges[1].cls == EdgeClass::kE2);
        CHECK(graph.edges[2].cls == EdgeClass::kE3);
    }
    SECTION("deterministic ordering: E1 row-major, then E2, then E3") {
        auto rng = testutil::engine(22);
        const PersistenceDiagram X = testutil::random_diagram(rng, 3, 3);
        const PersistenceDiagram Y = testutil::random_diagram(rng, 2, 2);
        const WassersteinGraph graph = build_wasserstein_graph(X, Y, 2, 2);
        REQUIRE(graph.num_edges() == 3 * 2 + 3 + 2);
        std::size_t e = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 2; ++j, ++e) {
                CHECK(graph.edges[e].cls == EdgeClass::kE1);
                CHECK(graph.edges[e].u == i);
                CHECK(graph.edges[e].v == j);
            }
        }
        for (std::size_t i = 0; i < 3; ++i, ++e) {
            CHECK(graph.edges[e].cls == EdgeClass::kE2);
            CHECK(graph.edges[e].u == i);
            CHECK(graph.edges[e].v == 2 + i);
        }
        for (std::size_t j = 0; j < 2; ++j, ++e) {
            CHECK(graph.edges[e].cls == EdgeClass::kE3);
            CHECK(graph.edges[e].u == 3 + j);
            CHECK(graph.edges[e].v == j);
        }
    }
    SECTION("weights are nonnegative") {
        auto rng = testutil::engine(23);
        const WassersteinGraph graph = build_wasserstein_graph(
                testutil::random_diagram(rng, 3, 5), testutil::random_diagram(rng, 3, 5), 3, 1);
        for (const auto& edge : graph.edges) CHECK(edge.theta >= 0);
    }
}

TEST_CASE("compile_qubo") {
    const PersistenceDiagram X = make_diagram({{0, 2}});
    const PersistenceDiagram Y = make_diagram({{0, 2.5}});
    const WassersteinGraph graph = build_wasserstein_graph(X, Y, 2, 2);
    const Rational gamma(2);

    SECTION("all-zeros pays the double degree penalty") {
        const CompiledQubo compiled = compile_qubo(graph, gamma);
        CHECK(evaluate_qubo(compiled.model, Assignment{0, 0, 0}) == 2 * gamma);
    }
    SECTION("activating the direct match leaves only its cost") {
        const CompiledQubo compiled = compile_qubo(graph, gamma);
        CHECK(evaluate_qubo(compiled.model, Assignment{1, 0, 0}) == graph.edges[0].theta);
    }
    SECTION("edge-variable bijection covers 0..N-1") {
        const CompiledQubo compiled = compile_qubo(graph, gamma);
        REQUIRE(compiled.variable_to_edge.size() == graph.num_edges());
        CHECK(compiled.model.num_vars() == graph.num_edges());
        for (std::size_t i = 0; i < compiled.variable_to_edge.size(); ++i) {
            CHECK(compiled.variable_to_edge[i] == i);
        }
    }
    SECTION("negative gamma is rejected, zero is allowed") {
        CHECK_THROWS_AS(compile_qubo(graph, Rational(-1)), DomainError);
        const CompiledQubo degenerate = compile_qubo(graph, Rational(0));
        CHECK(argmin_exhaustive(degenerate.model).state == Assignment{0, 0, 0});
    }
    SECTION("compiled energies match the direct Hamiltonian on every state") {
        // Brute-force symbolic-vs-numeric equivalence oracle.
        auto rng = testutil::engine(31);
        for (int trial = 0; trial < 8; ++trial) {
            const PersistenceDiagram A = testutil::random_diagram(rng, 1, 3);
            const PersistenceDiagram B = testutil::random_diagram(rng, 1, 3);
            const WassersteinGraph W = build_wasserstein_graph(A, B, 2, 2);
            const Rational g(3, 2);
            const CompiledQubo compiled = compile_qubo(W, g);
            const std::size_t N = W.num_edges();
            for (std::uint64_t k = 0; k < (std::uint64_t(1) << N); ++k) {
                const Assignment x = testutil::state_of_rank(k, N);
                CHECK(evaluate_qubo(compiled.model, x) == direct_hamiltonian(W, g, x));
            }
        }
    }
    SECTION("logical graph of the one-point compile matches the symbolic expansion") {
        // Cross terms exist exactly where edges share an off-diagonal node:
        // (E1, E2_u) and (E1, E3_v), never (E2, E3).
        const CompiledQubo compiled = compile_qubo(graph, gamma);
        const LogicalGraph logical = logical_graph(compiled.model);
        REQUIRE(logical.num_nodes() == 3);
        REQUIRE(logical.num_edges() == 2);
        CHECK(compiled.model.quadratic(0, 1) == 2 * gamma);
        CHECK(compiled.model.quadratic(0, 2) == 2 * gamma);
        CHECK(compiled.model.quadratic(1, 2) == Rational(0));
    }
}

TEST_CASE("default_gamma") {
    SECTION("exceeds the max weight by the fixed margin") {
        const WassersteinGraph graph = build_wasserstein_graph(
                make_diagram({{0, 2}}), make_diagram({{1, 3}}), 2, 2);
        // max theta = 2 from the E1 edge.
        CHECK(default_gamma(graph) == Rational(9, 4));
    }
    SECTION("identical diagrams fall back to the floor of one") {
        const PersistenceDiagram X = make_diagram({{1, 1.5}});
        WassersteinGraph graph = build_wasserstein_graph(X, X, 2, 2);
        // Zero out the diagonal weights too: identical points already make
        // the E1 weight zero; force the rest.
        for (auto& edge : graph.edges) edge.theta = 0;
        CHECK(default_gamma(graph) == Rational(1));
    }
    SECTION("empty graph has no gamma") {
        CHECK_THROWS_AS(default_gamma(build_wasserstein_graph({}, {}, 2, 2)), DomainError);
    }
    SECTION("argmin under the default gamma decodes to a valid matching") {
        auto rng = testutil::engine(47);
        for (int trial = 0; trial < 25; ++trial) {
            const PersistenceDiagram A = testutil::random_diagram(rng, 1, 4);
            const PersistenceDiagram B = testutil::random_diagram(rng, 1, 4);
            const WassersteinGraph W = build_wasserstein_graph(A, B, 2, 2);
            const CompiledQubo compiled = compile_qubo(W, default_gamma(W));
            const ArgminResult best = argmin_exhaustive(compiled.model);
            CHECK(decode_matching(best.state, compiled, W).constraint_violations == 0);
        }
    }
}

TEST_CASE("decode_matching") {
    const WassersteinGraph graph = build_wasserstein_graph(
            make_diagram({{0, 2}}), make_diagram({{0, 2.5}}), 2, 2);
    const CompiledQubo compiled = compile_qubo(graph, default_gamma(graph));

    SECTION("direct match decodes cleanly") {
        const Matching matching = decode_matching(Assignment{1, 0, 0}, compiled, graph);
        CHECK(matching.activated_edges == std::vector<std::size_t>{0});
        CHECK(matching.cost == graph.edges[0].theta);
        CHECK(matching.constraint_violations == 0);
    }
    SECTION("empty activation violates both off-diagonal degrees") {
        const Matching matching = decode_matching(Assignment{0, 0, 0}, compiled, graph);
        CHECK(matching.activated_edges.empty());
        CHECK(matching.cost == Rational(0));
        CHECK(matching.constraint_violations == 2);
    }
    SECTION("degree excess counts as a violation") {
        const Matching matching = decode_matching(Assignment{1, 1, 0}, compiled, graph);
        CHECK(matching.constraint_violations >= 1);
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(decode_matching(Assignment{1, 0}, compiled, graph), DomainError);
    }
    SECTION("energy equals cost exactly on violation-free assignments") {
        for (std::uint64_t k = 0; k < 8; ++k) {
            const Assignment x = testutil::state_of_rank(k, 3);
            const Matching matching = decode_matching(x, compiled, graph);
            if (matching.constraint_violations == 0) {
                CHECK(evaluate_qubo(compiled.model, x) == matching.cost);
            }
        }
    }
}

TEST_CASE("rescaling the diagrams rescales weights but not the argmin") {
    auto rng = testutil::engine(53);
    const Rational scale(3, 2);
    for (int trial = 0; trial < 5; ++trial) {
        PersistenceDiagram A = testutil::random_diagram(rng, 1, 3);
        PersistenceDiagram B = testutil::random_diagram(rng, 1, 3);
        PersistenceDiagram A_scaled = A, B_scaled = B;
        for (auto& pt : A_scaled.points) {
            pt.birth *= scale;
            pt.death *= scale;
        }
        for (auto& pt : B_scaled.points) {
            pt.birth *= scale;
            pt.death *= scale;
        }

        const WassersteinGraph W = build_wasserstein_graph(A, B, 2, 2);
        const WassersteinGraph W_scaled = build_wasserstein_graph(A_scaled, B_scaled, 2, 2);
        const Rational factor = scale * scale;  // s^p with p = 2
        for (std::size_t e = 0; e < W.num_edges(); ++e) {
            CHECK(W_scaled.edges[e].theta == factor * W.edges[e].theta);
        }

        const auto best = argmin_exhaustive(compile_qubo(W, default_gamma(W)).model);
        const auto best_scaled =
                argmin_exhaustive(compile_qubo(W_scaled, default_gamma(W_scaled)).model);
        CHECK(best.state == best_scaled.state);
    }
}
