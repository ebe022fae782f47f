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
#include <utility>
#include <vector>

namespace pdqubo {

/// Chimera hardware connectivity: an M x N grid of K_{L,L} unit cells.
/// Node numbering is cell row-major, shore 0 before shore 1 within each
/// cell. Shore 0 couples to the vertically adjacent cell at the same shore
/// position; shore 1 couples horizontally.
struct HardwareGraph {
    std::size_t rows = 0;   // M
    std::size_t cols = 0;   // N
    std::size_t shore = 0;  // L

    std::vector<std::vector<std::size_t>> adjacency;            // sorted neighbor lists
    std::vector<std::pair<std::size_t, std::size_t>> edges;     // u < v, sorted

    std::size_t num_nodes() const { return 2 * rows * cols * shore; }
    std::size_t num_edges() const { return edges.size(); }

    std::size_t node_id(std::size_t row, std::size_t col, std::size_t side,
                        std::size_t k) const {
        return ((row * cols + col) * 2 + side) * shore + k;
    }

    bool has_edge(std::size_t u, std::size_t v) const;
};

/// Builds C(M, N, L). Throws DomainError unless M, N, L >= 1. The edge
/// count is M*N*L^2 + L*(M*(N-1) + N*(M-1)).
HardwareGraph chimera(std::size_t rows, std::size_t cols, std::size_t shore);

}  // namespace pdqubo
