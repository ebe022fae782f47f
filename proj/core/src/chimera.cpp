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

#include "pdqubo/chimera.hpp"

#include <algorithm>

#include "pdqubo/errors.hpp"

namespace pdqubo {

bool HardwareGraph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= adjacency.size()) return false;
    const auto& neighbors = adjacency[u];
    return std::binary_search(neighbors.begin(), neighbors.end(), v);
}

HardwareGraph chimera(std::size_t rows, std::size_t cols, std::size_t shore) {
    if (rows < 1 || cols < 1 || shore < 1) {
        throw DomainError("chimera dimensions must all be at least 1");
    }

    HardwareGraph graph;
    graph.rows = rows;
    graph.cols = cols;
    graph.shore = shore;
    graph.adjacency.resize(graph.num_nodes());

    const auto add_edge = [&](std::size_t u, std::size_t v) {
        if (u > v) std::swap(u, v);
        graph.edges.emplace_back(u, v);
        graph.adjacency[u].push_back(v);
        graph.adjacency[v].push_back(u);
    };

    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            // Complete bipartite cell.
            for (std::size_t a = 0; a < shore; ++a) {
                for (std::size_t b = 0; b < shore; ++b) {
                    add_edge(graph.node_id(r, c, 0, a), graph.node_id(r, c, 1, b));
                }
            }
            // Shore 0 couples vertically, shore 1 horizontally.
            if (r + 1 < rows) {
                for (std::size_t k = 0; k < shore; ++k) {
                    add_edge(graph.node_id(r, c, 0, k), graph.node_id(r + 1, c, 0, k));
                }
            }
            if (c + 1 < cols) {
                for (std::size_t k = 0; k < shore; ++k) {
                    add_edge(graph.node_id(r, c, 1, k), graph.node_id(r, c + 1, 1, k));
                }
            }
        }
    }

    std::sort(graph.edges.begin(), graph.edges.end());
    for (auto& neighbors : graph.adjacency) {
        std::sort(neighbors.begin(), neighbors.end());
    }
    return graph;
}

}  // namespace pdqubo
