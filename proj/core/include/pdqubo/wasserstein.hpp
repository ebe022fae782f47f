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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "pdqubo/diagram.hpp"
#include "pdqubo/model.hpp"

namespace pdqubo {

enum class EdgeClass : std::uint8_t { kE1, kE2, kE3 };

inline const char* edge_class_name(EdgeClass cls) {
    switch (cls) {
        case EdgeClass::kE1: return "E1";
        case EdgeClass::kE2: return "E2";
        default: return "E3";
    }
}

/// Candidate match between x_bar[u] and y_bar[v]; theta is the transport
/// cost of activating it.
struct WassersteinEdge {
    std::size_t u;  // index into sides.x_bar
    std::size_t v;  // index into sides.y_bar
    EdgeClass cls;
    Rational theta;

    double theta_d() const { return to_double(theta); }
};

/// Bipartite matching graph over the augmented sides. E1 is complete
/// between off-diagonal points; E2/E3 pair each point with its own
/// projection only. Edge order is fixed: E1 row-major over X x Y, then E2
/// in X order, then E3 in Y order; the edge count is always mn + m + n.
struct WassersteinGraph {
    AugmentedSides sides;
    std::vector<WassersteinEdge> edges;
    double p = 2;  // matching exponent, >= 1
    double q = 2;  // ground-norm exponent, >= 1 or infinity

    std::size_t num_edges() const { return edges.size(); }
};

/// Transport cost of matching u with v: the ground distance raised to the
/// p-th power, so that summing activated edges reproduces the matching
/// cost. Point-to-own-projection pairs use the l-inf ground distance; all
/// other admissible pairs use l-q. Exact rational arithmetic where the
/// exponents allow (integer p with q in {1, 2, inf}); otherwise the value
/// is computed in double precision and converted. Throws DomainError for
/// same-side pairs and for pairs that are not edges of the graph.
Rational edge_weight(const SideNode& u, const SideNode& v, double p, double q);

/// Builds the graph for two diagrams. Empty diagrams yield the
/// corresponding empty edge classes. Requires p >= 1 and q >= 1.
WassersteinGraph build_wasserstein_graph(const PersistenceDiagram& X,
                                         const PersistenceDiagram& Y, double p, double q);

/// The compiled problem: variable i activates edge variable_to_edge[i]
/// (the identity by construction, kept explicit as the contract).
struct CompiledQubo {
    QuboModel model;
    Rational gamma;
    std::vector<std::size_t> variable_to_edge;
};

/// Compiles cost + gamma * constraint into a QUBO over one binary variable
/// per edge. Expanding the degree constraints with x^2 = x gives: linear
/// coefficient theta_e - gamma * (number of off-diagonal endpoints of e),
/// quadratic coefficient 2 * gamma per pair of edges sharing an
/// off-diagonal node, and constant offset gamma * (m + n). gamma = 0 is
/// accepted (it produces the degenerate cost-only model); negative gamma
/// throws DomainError.
CompiledQubo compile_qubo(const WassersteinGraph& graph, const Rational& gamma);

/// Penalty weight (1 + 1/8) * max theta, strictly above the bound that
/// makes the QUBO minimizer a valid matching. Falls back to 1 when every
/// weight is zero; throws DomainError on an empty graph.
Rational default_gamma(const WassersteinGraph& graph);

/// A decoded sample: the activated edges, their summed transport cost, and
/// the number of degree violations (off-diagonal nodes with degree != 1
/// plus diagonal nodes with degree > 1).
struct Matching {
    std::vector<std::size_t> activated_edges;
    Rational cost;
    std::size_t constraint_violations = 0;

    double cost_d() const { return to_double(cost); }
};

Matching decode_matching(std::span<const std::uint8_t> x, const CompiledQubo& compiled,
                         const WassersteinGraph& graph);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace pdqubo
