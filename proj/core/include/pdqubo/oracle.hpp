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
#include <vector>

#include "pdqubo/diagram.hpp"

namespace pdqubo {

/// Result of an exact distance computation. `matching[i]` is the y_bar
/// index paired with x_bar[i]; the matching is a perfect matching on the
/// augmented sides restricted to admissible pairs.
struct OracleResult {
    double cost = 0;      // optimal matching cost (d_p)^p
    double distance = 0;  // cost^(1/p)
    std::vector<std::size_t> matching;
};

inline constexpr std::size_t kBruteForceCap = 9;  // on m + n

/// Enumerates every perfect matching of the augmented bipartite graph that
/// respects admissible pairs (E1, E2, E3, plus zero-cost pairings between
/// leftover diagonal nodes) and returns the cheapest; ties go to the first
/// matching in enumeration order. Throws SizeError when m + n exceeds the
/// cap.
OracleResult brute_force_distance(const PersistenceDiagram& X, const PersistenceDiagram& Y,
                                  double p, double q);

/// Kuhn-Munkres assignment on the augmented cost matrix; polynomial, no
/// size cap. Inadmissible pairs carry a finite surrogate weight (sum of
/// all finite weights + 1) so the arithmetic stays total.
OracleResult hungarian_distance(const PersistenceDiagram& X, const PersistenceDiagram& Y,
                                double p, double q);

/// Cost of a caller-supplied perfect matching on the augmented sides.
/// Throws DomainError if the matching is not a perfect matching or pairs a
/// point with a foreign projection.
double matching_cost(const PersistenceDiagram& X, const PersistenceDiagram& Y,
                     const std::vector<std::size_t>& matching, double p, double q);

}  // namespace pdqubo
