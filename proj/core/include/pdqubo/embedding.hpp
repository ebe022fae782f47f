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

#include <cstdint>
#include <optional>
#include <vector>

#include "pdqubo/chimera.hpp"
#include "pdqubo/model.hpp"
#include "pdqubo/sampler.hpp"

namespace pdqubo {

/// Minor embedding: chains[u] is the sorted set of hardware qubits
/// representing logical vertex u. Valid embeddings have pairwise disjoint,
/// connected chains with a hardware edge behind every logical edge.
struct Embedding {
    std::vector<std::vector<std::size_t>> chains;

    std::size_t num_chains() const { return chains.size(); }
};

struct ChainStats {
    std::size_t max_len = 0;
    double mean_len = 0;
    std::size_t total_qubits = 0;
};

ChainStats chain_stats(const Embedding& embedding);

/// Violations found by the validator. An empty report means the embedding
/// is valid. Validation never throws.
struct ValidationReport {
    struct Overlap {
        std::size_t qubit;
        std::size_t first_vertex;
        std::size_t second_vertex;
    };
    struct Disconnected {
        std::size_t vertex;
    };
    struct MissingEdge {
        std::size_t u, v;
    };

    std::vector<Overlap> overlaps;
    std::vector<Disconnected> disconnected;
    std::vector<MissingEdge> missing_edges;

    bool valid() const {
        return overlaps.empty() && disconnected.empty() && missing_edges.empty();
    }
    std::size_t total() const {
        return overlaps.size() + disconnected.size() + missing_edges.size();
    }
};

ValidationReport validate_embedding(const LogicalGraph& logical, const HardwareGraph& hardware,
                                    const Embedding& embedding);

struct EmbedOptions {
    int retries = 10;             // fresh vertex orderings before giving up
    int improvement_passes = 24;  // rip-and-reroute rounds per attempt
    int shrink_passes = 2;        // chain-shortening rounds after feasibility
};

/// Outcome of the chain-growth heuristic. Failure is a legitimate result
/// (minor containment is NP-hard); it means "not found", not "not
/// embeddable".
struct EmbedResult {
    std::optional<Embedding> embedding;
    int attempts = 0;

    bool success() const { return embedding.has_value(); }
};

/// Chain-growth heuristic: vertices are placed one at a time in a seeded
/// random order, routed to their placed neighbors along penalized shortest
/// paths, then iteratively ripped and re-routed until chains are disjoint.
/// Every reported success is validator-clean. Deterministic given the
/// seed.
EmbedResult find_embedding(const LogicalGraph& logical, const HardwareGraph& hardware,
                           std::uint64_t seed, const EmbedOptions& options = {});

/// Applies an embedding to a QUBO: each bias is split equally across its
/// chain, every intra-chain hardware edge receives the ferromagnetic
/// coupling -(1 + max |coefficient|) with the compensating half-strength
/// biases (an equality penalty: agreeing chains keep the logical energy,
/// each broken edge pays half the coupling magnitude), and each logical
/// coupling lands on the smallest available hardware coupler between the
/// two chains. The result has one variable per hardware qubit.
QuboModel embed_qubo(const QuboModel& logical, const Embedding& embedding,
                     const HardwareGraph& hardware);

/// Maps a hardware-level state back to logical variables. Returns nullopt
/// when any chain is broken (not all of its qubits agree).
std::optional<Assignment> unembed_state(std::span<const std::uint8_t> hardware_state,
                                        const Embedding& embedding);

/// Unembeds a whole sample set against the logical model. Reads with
/// broken chains are discarded; the discard rate is reported alongside.
struct UnembedResult {
    SampleSet samples;
    double discard_rate = 0;
};

UnembedResult unembed_samples(const SampleSet& hardware_samples, const Embedding& embedding,
                              const QuboModel& logical);

}  // namespace pdqubo
