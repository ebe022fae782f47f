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

#include "pdqubo/oracle.hpp"

#include "catch2/catch_amalgamated.hpp"
#include "pdqubo/errors.hpp"
#include "pdqubo/wasserstein.hpp"
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

}  // namespace

TEST_CASE("brute_force_distance") {
    SECTION("empty diagrams are at distance zero") {
        const OracleResult result = brute_force_distance({}, {}, 2, 2);
        CHECK(result.cost == 0.0);
        CHECK(result.distance == 0.0);
        CHECK(result.matching.empty());
    }
    SECTION("a lone point is forced onto the diagonal") {
        const OracleResult result = brute_force_distance(make_diagram({{0, 2}}), {}, 2, 2);
        CHECK(result.cost == 1.0);
        CHECK(result.distance == 1.0);
        REQUIRE(result.matching.size() == 1);
        CHECK(result.matching[0] == 0);
    }
    SECTION("direct match beats the double-diagonal route") {
        const OracleResult result = brute_force_distance(make_diagram({{0, 2}}),
                                                         make_diagram({{0, 2.5}}), 2, 2);
        // Hand enumeration: direct match costs 0.25; both-to-diagonal
        // costs 1 + 1.5625.
        CHECK_THAT(result.cost, Catch::Matchers::WithinAbs(0.25, 1e-12));
        CHECK(result.matching[0] == 0);
    }
    SECTION("the factorial cap is enforced") {
        auto rng = testutil::engine(3);
        const PersistenceDiagram X = testutil::random_diagram(rng, 6, 6);
        const PersistenceDiagram Y = testutil::random_diagram(rng, 6, 6);
        CHECK_THROWS_AS(brute_force_distance(X, Y, 2, 2), SizeError);
    }
}

TEST_CASE("hungarian_distance agrees with brute force") {
    // The assignment route must tie the enumeration route on every
    // instance small enough to enumerate.
    auto rng = testutil::engine(404);
    int checked = 0;
    while (checked < 200) {
        const PersistenceDiagram X = testutil::random_diagram(rng, 0, 5);
        const PersistenceDiagram Y = testutil::random_diagram(rng, 0, 4);
        if (X.size() + Y.size() > kBruteForceCap) continue;
        ++checked;
        const double p = (checked % 3 == 0) ? 1.0 : 2.0;
        const double q = (checked % 5 == 0) ? kInfinity : 2.0;
        const OracleResult brute = brute_force_distance(X, Y, p, q);
        const OracleResult assignment = hungarian_distance(X, Y, p, q);
        CHECK_THAT(assignment.cost, Catch::Matchers::WithinAbs(brute.cost, 1e-12));
    }
}

TEST_CASE("hungarian_distance on structured instances") {
    SECTION("identical diagrams match at zero cost") {
        auto rng = testutil::engine(8);
        const PersistenceDiagram X = testutil::random_diagram(rng, 1, 5);
        const OracleResult result = hungarian_distance(X, X, 2, 2);
        CHECK(result.cost == 0.0);
        CHECK(result.distance == 0.0);
    }
    SECTION("four against three stays within brute-force reach") {
        auto rng = testutil::engine(9);
        const PersistenceDiagram X = testutil::random_diagram(rng, 4, 4);
        const PersistenceDiagram Y = testutil::random_diagram(rng, 3, 3);
        const OracleResult brute = brute_force_distance(X, Y, 2, 2);
        const OracleResult assignment = hungarian_distance(X, Y, 2, 2);
        CHECK_THAT(assignment.cost, Catch::Matchers::WithinAbs(brute.cost, 1e-12));
    }
    SECTION("distance is the p-th root of the cost") {
        auto rng = testutil::engine(10);
        const PersistenceDiagram X = testutil::random_diagram(rng, 2, 4);
        const PersistenceDiagram Y = testutil::random_diagram(rng, 2, 4);
        for (const double p : {1.0, 2.0, 3.0}) {
            const OracleResult result = hungarian_distance(X, Y, p, 2);
            CHECK_THAT(std::pow(result.distance, p),
                       Catch::Matchers::WithinAbs(result.cost, 1e-9));
        }
    }
}

TEST_CASE("metric properties") {
    auto rng = testutil::engine(1234);
    SECTION("symmetry") {
        for (int trial = 0; trial < 20; ++trial) {
            const PersistenceDiagram X = testutil::random_diagram(rng, 0, 4);
            const PersistenceDiagram Y = testutil::random_diagram(rng, 0, 4);
            const double xy = hungarian_distance(X, Y, 2, 2).cost;
            const double yx = hungarian_distance(Y, X, 2, 2).cost;
            CHECK_THAT(xy, Catch::Matchers::WithinAbs(yx, 1e-12));
        }
    }
    SECTION("self-distance is zero") {
        for (int trial = 0; trial < 10; ++trial) {
            const PersistenceDiagram X = testutil::random_diagram(rng, 0, 5);
            CHECK(hungarian_distance(X, X, 2, 2).cost == 0.0);
        }
    }
    SECTION("triangle inequality on random triples") {
        for (int trial = 0; trial < 20; ++trial) {
            const PersistenceDiagram X = testutil::random_diagram(rng, 1, 4);
            const PersistenceDiagram Y = testutil::random_diagram(rng, 1, 4);
            const PersistenceDiagram Z = testutil::random_diagram(rng, 1, 4);
            const double xz = hungarian_distance(X, Z, 2, 2).distance;
            const double xy = hungarian_distance(X, Y, 2, 2).distance;
            const double yz = hungarian_distance(Y, Z, 2, 2).distance;
            CHECK(xz <= xy + yz + 1e-9);
        }
    }
}

TEST_CASE("matching_cost") {
    SECTION("identity matching on identical diagrams is free") {
        auto rng = testutil::engine(55);
        const PersistenceDiagram X = testutil::random_diagram(rng, 3, 3);
        std::vector<std::size_t> identity{0, 1, 2, 3, 4, 5};
        CHECK(matching_cost(X, X, identity, 2, 2) == 0.0);
    }
    SECTION("the forced single-point matching costs one") {
        const PersistenceDiagram X = make_diagram({{0, 2}});
        CHECK(matching_cost(X, {}, {0}, 2, 2) == 1.0);
    }
    SECTION("consistent with the oracle's reported cost") {
        auto rng = testutil::engine(56);
        for (int trial = 0; trial < 20; ++trial) {
            const PersistenceDiagram X = testutil::random_diagram(rng, 1, 4);
            const PersistenceDiagram Y = testutil::random_diagram(rng, 1, 4);
            const OracleResult result = hungarian_distance(X, Y, 2, 2);
            CHECK_THAT(matching_cost(X, Y, result.matching, 2, 2),
                       Catch::Matchers::WithinAbs(result.cost, 1e-12));
        }
    }
    SECTION("non-bijections are structural errors") {
        const PersistenceDiagram X = make_diagram({{0, 2}, {1, 3}});
        CHECK_THROWS_AS(matching_cost(X, {}, {0}, 2, 2), DomainError);
        CHECK_THROWS_AS(matching_cost(X, {}, {0, 0}, 2, 2), DomainError);
        CHECK_THROWS_AS(matching_cost(X, {}, {0, 5}, 2, 2), DomainError);
    }
    SECTION("foreign projections are structural errors") {
        const PersistenceDiagram X = make_diagram({{0, 2}, {1, 3}});
        // Pair point 0 with the projection of point 1.
        CHECK_THROWS_AS(matching_cost(X, {}, {1, 0}, 2, 2), DomainError);
    }
}

TEST_CASE("compiled QUBO argmin reproduces the oracle cost") {
    auto rng = testutil::engine(777);
    for (int trial = 0; trial < 10; ++trial) {
        const PersistenceDiagram X = testutil::random_diagram(rng, 1, 4);
        const PersistenceDiagram Y = testutil::random_diagram(rng, 1, 4);
        const WassersteinGraph graph = build_wasserstein_graph(X, Y, 2, 2);
        if (graph.num_edges() > kDefaultEnumerationCap) continue;
        const CompiledQubo compiled = compile_qubo(graph, default_gamma(graph));
        const ArgminResult best = argmin_exhaustive(compiled.model);
        const OracleResult oracle = hungarian_distance(X, Y, 2, 2);
        CHECK_THAT(to_double(best.energy), Catch::Matchers::WithinAbs(oracle.cost, 1e-9));
    }
}
