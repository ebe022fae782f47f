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

#include "pdqubo/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "pdqubo/errors.hpp"

namespace pdqubo {

ChainStats chain_stats(const Embedding& embedding) {
    ChainStats stats;
    for (const auto& chain : embedding.chains) {
        stats.max_len = std::max(stats.max_len, chain.size());
        stats.total_qubits += chain.size();
    }
    if (!embedding.chains.empty()) {
        stats.mean_len = static_cast<double>(stats.total_qubits) /
                         static_cast<double>(embedding.chains.size());
    }
    return stats;
}

ValidationReport validate_embedding(const LogicalGraph& logical, const HardwareGraph& hardware,
                                    const Embedding& embedding) {
    ValidationReport report;
    const std::size_t num_qubits = hardware.num_nodes();
    const std::size_t num_vertices = logical.nodes.size();

    // Ownership map; detects overlaps and out-of-range qubits.
    std::vector<std::size_t> owner(num_qubits, num_vertices);
    for (std::size_t u = 0; u < std::min(num_vertices, embedding.chains.size()); ++u) {
        for (const std::size_t q : embedding.chains[u]) {
            if (q >= num_qubits) continue;  // reported below as a broken chain
            if (owner[q] != num_vertices) {
                report.overlaps.push_back({q, owner[q], u});
            } else {
                owner[q] = u;
            }
        }
    }

    // Connectivity (and existence) of every chain.
    for (std::size_t u = 0; u < num_vertices; ++u) {
        if (u >= embedding.chains.size() || embedding.chains[u].empty()) {
            report.disconnected.push_back({u});
            continue;
        }
        const auto& chain = embedding.chains[u];
        bool in_range = true;
        for (const std::size_t q : chain) {
            if (q >= num_qubits) in_range = false;
        }
        if (!in_range) {
            report.disconnected.push_back({u});
            continue;
        }
        std::vector<std::size_t> sorted_chain(chain);
        std::sort(sorted_chain.begin(), sorted_chain.end());
        sorted_chain.erase(std::unique(sorted_chain.begin(), sorted_chain.end()),
                           sorted_chain.end());
        std::vector<std::size_t> stack{sorted_chain.front()};
        std::vector<bool> visited(num_qubits, false);
        visited[sorted_chain.front()] = true;
        std::size_t reached = 0;
        while (!stack.empty()) {
            const std::size_t q = stack.back();
            stack.pop_back();
            ++reached;
            for (const std::size_t next : hardware.adjacency[q]) {
                if (visited[next]) continue;
                if (!std::binary_search(sorted_chain.begin(), sorted_chain.end(), next)) continue;
                visited[next] = true;
                stack.push_back(next);
            }
        }
        if (reached != sorted_chain.size()) {
            report.disconnected.push_back({u});
        }
    }

    // Logical adjacency must be realized by at least one hardware coupler.
    for (const auto& edge : logical.edges) {
        if (edge.i >= embedding.chains.size() || edge.j >= embedding.chains.size()) {
            report.missing_edges.push_back({edge.i, edge.j});
            continue;
        }
        bool connected = false;
        for (const std::size_t a : embedding.chains[edge.i]) {
            for (const std::size_t b : embedding.chains[edge.j]) {
                if (a < hardware.num_nodes() && b < hardware.num_nodes() &&
                    hardware.has_edge(a, b)) {
                    connected = true;
                    break;
                }
            }
            if (connected) break;
        }
        if (!connected) report.missing_edges.push_back({edge.i, edge.j});
    }
    return report;
}

namespace {

constexpr double kPenaltyBase = 10.0;
constexpr int kPenaltyCap = 8;
constexpr double kForbidden = 1e9;

struct Placement {
    std::vector<std::vector<std::size_t>> chains;
    std::vector<int> usage;  // number of chains covering each qubit

    void rip(std::size_t u) {
        for (const std::size_t q : chains[u]) --usage[q];
        chains[u].clear();
    }
    void assign(std::size_t u, std::vector<std::size_t> chain) {
        chains[u] = std::move(chain);
        for (const std::size_t q : chains[u]) ++usage[q];
    }
    int max_usage() const {
        int peak = 0;
        for (const int c : usage) peak = std::max(peak, c);
        return peak;
    }
};

// Dijkstra from the member set of `source_chain`; dist[q] is the cost of
// entering every node on the path including q itself, with chain members
// free. Deterministic: the queue orders ties by node id.
void shortest_paths(const HardwareGraph& hardware, const std::vector<std::size_t>& source_chain,
                    const std::vector<double>& node_cost, std::vector<double>& dist,
                    std::vector<std::size_t>& parent) {
    const std::size_t n = hardware.num_nodes();
    dist.assign(n, std::numeric_limits<double>::infinity());
    parent.assign(n, n);

    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (const std::size_t q : source_chain) {
        dist[q] = 0;
        queue.push({0.0, q});
    }
    while (!queue.empty()) {
        const auto [d, q] = queue.top();
        queue.pop();
        if (d > dist[q]) continue;
        for (const std::size_t next : hardware.adjacency[q]) {
            const double candidate = d + node_cost[next];
            if (candidate < dist[next]) {
                dist[next] = candidate;
                parent[next] = q;
                queue.push({candidate, next});
            }
        }
    }
}

// Uniform choice among the indices minimizing `value`; keeps attempts
// diverse while staying deterministic for a fixed engine state.
template <typename Value>
std::size_t random_argmin(const std::vector<Value>& value, std::mt19937_64& engine) {
    std::size_t best = 0;
    std::size_t ties = 1;
    for (std::size_t i = 1; i < value.size(); ++i) {
        if (value[i] < value[best]) {
            best = i;
            ties = 1;
        } else if (value[i] == value[best]) {
            ++ties;
            if (rng::uniform_index(engine, ties) == 0) best = i;
        }
    }
    return best;
}

// Chooses a chain for vertex u (already ripped) and returns it; the chain
// may overlap other chains when `allow_overlap` (penalties instead of
// hard exclusion).
std::vector<std::size_t> route_vertex(
        std::size_t u, const std::vector<std::vector<std::size_t>>& logical_adj,
        const Placement& placement, const HardwareGraph& hardware, bool allow_overlap,
        std::mt19937_64& engine) {
    const std::size_t n = hardware.num_nodes();

    std::vector<double> node_cost(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (placement.usage[q] == 0) {
            node_cost[q] = 1.0;
        } else if (allow_overlap) {
            node_cost[q] = std::pow(kPenaltyBase, std::min(placement.usage[q], kPenaltyCap));
        } else {
            node_cost[q] = kForbidden;
        }
    }

    std::vector<std::size_t> placed_neighbors;
    for (const std::size_t v : logical_adj[u]) {
        if (!placement.chains[v].empty()) placed_neighbors.push_back(v);
    }

    if (placed_neighbors.empty()) {
        return {random_argmin(placement.usage, engine)};
    }

    std::vector<std::vector<double>> dist(placed_neighbors.size());
    std::vector<std::vector<std::size_t>> parent(placed_neighbors.size());
    for (std::size_t k = 0; k < placed_neighbors.size(); ++k) {
        shortest_paths(hardware, placement.chains[placed_neighbors[k]], node_cost, dist[k],
                       parent[k]);
    }

    // Candidate roots pay their own node cost once; each neighbor path
    // contributes its interior cost. A root inside a neighbor chain gets
    // no discount beyond the zero path.
    std::vector<double> total(n);
    for (std::size_t g = 0; g < n; ++g) {
        total[g] = node_cost[g];
        for (const auto& d : dist) {
            if (d[g] > 0) total[g] += d[g] - node_cost[g];
        }
    }
    const std::size_t root = random_argmin(total, engine);
    if (std::isinf(total[root])) return {};  // unreachable hardware

    std::vector<std::size_t> chain{root};
    std::vector<std::uint8_t> member(n, 0);
    member[root] = 1;
    for (std::size_t k = 0; k < placed_neighbors.size(); ++k) {
        std::size_t node = root;
        while (dist[k][node] > 0) {
            const std::size_t prev = parent[k][node];
            if (prev == n) break;
            if (dist[k][prev] == 0) break;  // reached the neighbor's chain
            if (!member[prev]) {
                member[prev] = 1;
                chain.push_back(prev);
            }
            node = prev;
        }
    }
    std::sort(chain.begin(), chain.end());
    return chain;
}

}  // namespace

EmbedResult find_embedding(const LogicalGraph& logical, const HardwareGraph& hardware,
                           std::uint64_t seed, const EmbedOptions& options) {
    EmbedResult result;
    const std::size_t n = logical.nodes.size();
    if (n == 0) {
        result.embedding = Embedding{};
        return result;
    }
    if (n > hardware.num_nodes()) {
        result.attempts = 0;
        return result;  // more vertices than qubits: hopeless
    }

    std::vector<std::vector<std::size_t>> logical_adj(n);
    for (const auto& edge : logical.edges) {
        logical_adj[edge.i].push_back(edge.j);
        logical_adj[edge.j].push_back(edge.i);
    }
    for (auto& neighbors : logical_adj) std::sort(neighbors.begin(), neighbors.end());

    for (int attempt = 0; attempt < options.retries; ++attempt) {
        result.attempts = attempt + 1;
        std::mt19937_64 engine(rng::derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng::shuffle(order, engine);

        Placement placement;
        placement.chains.assign(n, {});
        placement.usage.assign(hardware.num_nodes(), 0);

        bool attempt_failed = false;
        for (const std::size_t u : order) {
            auto chain = route_vertex(u, logical_adj, placement, hardware, true, engine);
            if (chain.empty()) {
                attempt_failed = true;
                break;
            }
            placement.assign(u, std::move(chain));
        }
        if (attempt_failed) continue;

        for (int pass = 0; pass < options.improvement_passes && placement.max_usage() > 1;
             ++pass) {
            rng::shuffle(order, engine);  // fresh sweep order breaks thrash cycles
            for (const std::size_t u : order) {
                placement.rip(u);
                auto chain = route_vertex(u, logical_adj, placement, hardware, true, engine);
                if (chain.empty()) {
                    attempt_failed = true;
                    break;
                }
                placement.assign(u, std::move(chain));
            }
            if (attempt_failed) break;
        }
        if (attempt_failed || placement.max_usage() > 1) continue;

        // Feasible; try to shorten chains without introducing overlaps.
        for (int pass = 0; pass < options.shrink_passes; ++pass) {
            for (const std::size_t u : order) {
                const auto old_chain = placement.chains[u];
                placement.rip(u);
                auto candidate =
                        route_vertex(u, logical_adj, placement, hardware, false, engine);
                bool overlaps = candidate.empty();
                for (const std::size_t q : candidate) {
                    if (placement.usage[q] > 0) overlaps = true;
                }
                if (overlaps || candidate.size() >= old_chain.size()) {
                    placement.assign(u, old_chain);
                } else {
                    placement.assign(u, std::move(candidate));
                }
            }
        }

        Embedding embedding{placement.chains};
        if (validate_embedding(logical, hardware, embedding).valid()) {
            result.embedding = std::move(embedding);
            return result;
        }
    }
    return result;
}

QuboModel embed_qubo(const QuboModel& logical, const Embedding& embedding,
                     const HardwareGraph& hardware) {
    const LogicalGraph graph = logical_graph(logical);
    if (!validate_embedding(graph, hardware, embedding).valid()) {
        throw DomainError("cannot embed a QUBO through an invalid embedding");
    }

    Rational max_abs = 0;
    const auto visit = [&](const Rational& coeff) {
        const Rational a = coeff < 0 ? Rational(-coeff) : coeff;
        if (a > max_abs) max_abs = a;
    };
    for (const auto& [i, h] : logical.linear_terms()) visit(h);
    for (const auto& [ij, j_coeff] : logical.quadratic_terms()) visit(j_coeff);
    const Rational chain_coupling = -(1 + max_abs);
    // Ferromagnetic equality penalty in QUBO form: the coupling plus the
    // compensating half-strength biases give 0 for agreeing qubits and
    // |coupling| / 2 for a broken edge, so unbroken hardware states keep
    // exactly the logical energy.
    const Rational chain_bias = -chain_coupling / 2;

    QuboModel embedded(hardware.num_nodes());
    for (std::size_t u = 0; u < logical.num_vars(); ++u) {
        const auto& chain = embedding.chains[u];
        const Rational bias = logical.linear(u);
        if (bias != 0) {
            const Rational share = bias / Rational(chain.size());
            for (const std::size_t q : chain) embedded.add_linear(q, share);
        }
        for (std::size_t a = 0; a < chain.size(); ++a) {
            for (std::size_t b = a + 1; b < chain.size(); ++b) {
                if (hardware.has_edge(chain[a], chain[b])) {
                    embedded.add_quadratic(chain[a], chain[b], chain_coupling);
                    embedded.add_linear(chain[a], chain_bias);
                    embedded.add_linear(chain[b], chain_bias);
                }
            }
        }
    }
    for (const auto& [ij, j_coeff] : logical.quadratic_terms()) {
        // The logical coupler lands on the smallest hardware edge between
        // the two chains.
        std::pair<std::size_t, std::size_t> chosen{hardware.num_nodes(), hardware.num_nodes()};
        for (const std::size_t a : embedding.chains[ij.first]) {
            for (const std::size_t b : embedding.chains[ij.second]) {
                if (!hardware.has_edge(a, b)) continue;
                const auto candidate = std::minmax(a, b);
                if (std::pair(candidate.first, candidate.second) < chosen) {
                    chosen = {candidate.first, candidate.second};
                }
            }
        }
        embedded.add_quadratic(chosen.first, chosen.second, j_coeff);
    }
    embedded.set_offset(logical.offset());
    return embedded;
}

std::optional<Assignment> unembed_state(std::span<const std::uint8_t> hardware_state,
                                        const Embedding& embedding) {
    Assignment logical(embedding.chains.size(), 0);
    for (std::size_t u = 0; u < embedding.chains.size(); ++u) {
        const auto& chain = embedding.chains[u];
        if (chain.empty() || chain.front() >= hardware_state.size()) return std::nullopt;
        const std::uint8_t bit = hardware_state[chain.front()];
        for (const std::size_t q : chain) {
            if (q >= hardware_state.size() || hardware_state[q] != bit) {
                return std::nullopt;  // broken chain
            }
        }
        logical[u] = bit;
    }
    return logical;
}

UnembedResult unembed_samples(const SampleSet& hardware_samples, const Embedding& embedding,
                              const QuboModel& logical) {
    const DenseQubo dense = dense_view(logical);
    std::map<Assignment, std::uint64_t> counts;
    std::uint64_t kept = 0, discarded = 0;
    for (const auto& record : hardware_samples.records) {
        const auto state = unembed_state(record.state, embedding);
        if (!state) {
            discarded += record.count;
            continue;
        }
        counts[*state] += record.count;
        kept += record.count;
    }

    UnembedResult result;
    result.samples.seed = hardware_samples.seed;
    result.samples.schedule = hardware_samples.schedule;
    result.samples.num_reads = kept;
    for (auto& [state, count] : counts) {
        result.samples.records.push_back({state, dense.energy(state), count});
    }
    std::stable_sort(result.samples.records.begin(), result.samples.records.end(),
                     [](const SampleRecord& a, const SampleRecord& b) {
                         if (a.energy != b.energy) return a.energy < b.energy;
                         return a.state < b.state;
                     });
    const std::uint64_t total = kept + discarded;
    result.discard_rate = total == 0 ? 0.0 : static_cast<double>(discarded) /
                                             static_cast<double>(total);
    return result;
}

}  // namespace pdqubo
