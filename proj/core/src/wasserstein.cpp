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

#include <cmath>
#include <string>

#include "pdqubo/errors.hpp"

namespace pdqubo {

namespace {

bool is_small_integer(double v) { return v == std::floor(v) && v >= 1 && v <= 64; }

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// theta for an admissible pair with coordinate deltas (dx, dy).
// `use_linf` selects the diagonal-pairing metric.
Rational pair_weight(const Rational& dx, const Rational& dy, bool use_linf, double p, double q) {
    const Rational ax = abs_rational(dx);
    const Rational ay = abs_rational(dy);

    if (is_small_integer(p)) {
        const auto pe = static_cast<unsigned>(p);
        if (use_linf || std::isinf(q)) {
            return rational_pow(ax > ay ? ax : ay, pe);
        }
        if (q == 1.0) {
            return rational_pow(ax + ay, pe);
        }
        if (q == 2.0 && pe % 2 == 0) {
            return rational_pow(ax * ax + ay * ay, pe / 2);
        }
    }

    // General exponents: double arithmetic, converted exactly.
    const double axd = to_double(ax);
    const double ayd = to_double(ay);
    double ground;
    if (use_linf || std::isinf(q)) {
        ground = std::max(axd, ayd);
    } else if (q == 1.0) {
        ground = axd + ayd;
    } else if (q == 2.0) {
        ground = std::hypot(axd, ayd);
    } else {
        ground = std::pow(std::pow(axd, q) + std::pow(ayd, q), 1.0 / q);
    }
    return rational_from_double(std::pow(ground, p));
}

void check_exponents(double p, double q) {
    if (!(p >= 1) || std::isinf(p)) {
        throw DomainError("matching exponent p must be a finite value >= 1");
    }
    if (!(q >= 1)) {
        throw DomainError("ground-norm exponent q must be >= 1 (or infinity)");
    }
}

}  // namespace

Rational edge_weight(const SideNode& u, const SideNode& v, double p, double q) {
    check_exponents(p, q);
    if (u.side == v.side) {
        throw DomainError("edge weight requested for two nodes on the same side");
    }
    const SideNode& a = (u.side == SideNode::Side::kXBar) ? u : v;
    const SideNode& b = (u.side == SideNode::Side::kXBar) ? v : u;

    bool own_projection = false;
    if (!a.is_diagonal && b.is_diagonal) {
        // b must be the projection of a (both indexed into X).
        own_projection = (b.point_index == a.point_index);
    } else if (a.is_diagonal && !b.is_diagonal) {
        own_projection = (a.point_index == b.point_index);
    }
    if (a.is_diagonal == b.is_diagonal) {
        if (a.is_diagonal) {
            throw DomainError("diagonal-diagonal pairs are not edges of the Wasserstein graph");
        }
        // Off-diagonal vs off-diagonal: an E1 edge.
    } else if (!own_projection) {
        throw DomainError("a point may pair only with its own diagonal projection");
    }

    return pair_weight(a.birth - b.birth, a.death - b.death, own_projection, p, q);
}

WassersteinGraph build_wasserstein_graph(const PersistenceDiagram& X,
                                         const PersistenceDiagram& Y, double p, double q) {
    check_exponents(p, q);
    WassersteinGraph graph;
    graph.sides = augment(X, Y);
    graph.p = p;
    graph.q = q;

    const std::size_t m = graph.sides.m;
    const std::size_t n = graph.sides.n;
    graph.edges.reserve(m * n + m + n);

    // E1: complete bipartite over the off-diagonal points, row-major.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            graph.edges.push_back(
                    {i, j, EdgeClass::kE1,
                     edge_weight(graph.sides.x_bar[i], graph.sides.y_bar[j], p, q)});
        }
    }
    // E2: each X point to its own projection (at y_bar[n + i]).
    for (std::size_t i = 0; i < m; ++i) {
        graph.edges.push_back(
                {i, n + i, EdgeClass::kE2,
                 edge_weight(graph.sides.x_bar[i], graph.sides.y_bar[n + i], p, q)});
    }
    // E3: each Y point to its own projection (at x_bar[m + j]).
    for (std::size_t j = 0; j < n; ++j) {
        graph.edges.push_back(
                {m + j, j, EdgeClass::kE3,
                 edge_weight(graph.sides.x_bar[m + j], graph.sides.y_bar[j], p, q)});
    }
    return graph;
}

CompiledQubo compile_qubo(const WassersteinGraph& graph, const Rational& gamma) {
    if (gamma < 0) {
        throw DomainError("penalty weight gamma must be nonnegative");
    }

    const std::size_t m = graph.sides.m;
    const std::size_t n = graph.sides.n;
    const std::size_t num_edges = graph.edges.size();

    CompiledQubo compiled;
    compiled.gamma = gamma;
    compiled.model = QuboModel(num_edges);
    compiled.variable_to_edge.resize(num_edges);
    for (std::size_t e = 0; e < num_edges; ++e) compiled.variable_to_edge[e] = e;

    // Incident-edge lists for the off-diagonal nodes only; diagonal nodes
    // carry no degree penalty (each touches exactly one edge anyway).
    std::vector<std::vector<std::size_t>> x_incident(m), y_incident(n);
    for (std::size_t e = 0; e < num_edges; ++e) {
        const WassersteinEdge& edge = graph.edges[e];
        std::size_t off_diagonal_endpoints = 0;
        if (!graph.sides.x_bar[edge.u].is_diagonal) {
            x_incident[edge.u].push_back(e);
            ++off_diagonal_endpoints;
        }
        if (!graph.sides.y_bar[edge.v].is_diagonal) {
            y_incident[edge.v].push_back(e);
            ++off_diagonal_endpoints;
        }
        const Rational linear = edge.theta - gamma * Rational(off_diagonal_endpoints);
        if (linear != 0) compiled.model.add_linear(e, linear);
    }

    const Rational two_gamma = 2 * gamma;
    const auto add_pairs = [&](const std::vector<std::size_t>& incident) {
        for (std::size_t a = 0; a < incident.size(); ++a) {
            for (std::size_t b = a + 1; b < incident.size(); ++b) {
                if (two_gamma != 0) {
                    compiled.model.add_quadratic(incident[a], incident[b], two_gamma);
                }
            }
        }
    };
    for (const auto& incident : x_incident) add_pairs(incident);
    for (const auto& incident : y_incident) add_pairs(incident);

    compiled.model.set_offset(gamma * Rational(m + n));
    return compiled;
}

Rational default_gamma(const WassersteinGraph& graph) {
    if (graph.edges.empty()) {
        throw DomainError("default gamma is undefined for an empty Wasserstein graph");
    }
    Rational max_theta = 0;
    for (const auto& edge : graph.edges) {
        if (edge.theta > max_theta) max_theta = edge.theta;
    }
    if (max_theta == 0) return 1;  // any positive value preserves the argmin
    return Rational(9, 8) * max_theta;
}

Matching decode_matching(std::span<const std::uint8_t> x, const CompiledQubo& compiled,
                         const WassersteinGraph& graph) {
    if (x.size() != graph.edges.size() || compiled.model.num_vars() != graph.edges.size()) {
        throw DomainError("assignment length does not match the edge count");
    }

    Matching matching;
    matching.cost = 0;
    std::vector<std::size_t> x_degree(graph.sides.x_bar.size(), 0);
    std::vector<std::size_t> y_degree(graph.sides.y_bar.size(), 0);

    for (std::size_t e = 0; e < x.size(); ++e) {
        if (x[e] > 1) throw DomainError("assignment entries must be 0 or 1");
        if (!x[e]) continue;
        const WassersteinEdge& edge = graph.edges[compiled.variable_to_edge[e]];
        matching.activated_edges.push_back(e);
        matching.cost += edge.theta;
        ++x_degree[edge.u];
        ++y_degree[edge.v];
    }

    const auto count_violations = [&](const std::vector<SideNode>& nodes,
                                      const std::vector<std::size_t>& degree) {
        std::size_t violations = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i].is_diagonal) {
                if (degree[i] > 1) ++violations;
            } else if (degree[i] != 1) {
                ++violations;
            }
        }
        return violations;
    };
    matching.constraint_violations = count_violations(graph.sides.x_bar, x_degree) +
                                     count_violations(graph.sides.y_bar, y_degree);
    return matching;
}

}  // namespace pdqubo
