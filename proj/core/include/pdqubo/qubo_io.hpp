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

#include <string>
#include <string_view>

#include "pdqubo/model.hpp"
#include "pdqubo/wasserstein.hpp"

namespace pdqubo {

/// QUBO text format:
///   # comment lines start with '#'
///   qubo <num_vars>          (first data line)
///   offset <decimal>         (optional, at most once)
///   i j coeff                (one term per line, 0-based, i <= j;
///                             i == j is a linear term)
/// Writers emit terms sorted by (i, j) with coefficients as shortest
/// round-trip decimals; repeated (i, j) lines accumulate on read.
std::string write_qubo_text(const QuboModel& model);

/// Parses the format above. `source` names the input in error messages.
QuboModel parse_qubo_text(std::string_view text, std::string_view source = "<qubo>");

QuboModel load_qubo(const std::string& path);

/// Sidecar variable map emitted next to a compiled QUBO: one line per
/// variable, `index class u_id v_id theta`. Node ids are x<i>/y<j> for
/// off-diagonal points and dx<i>/dy<j> for their projections.
std::string write_edge_map(const WassersteinGraph& graph);

/// Node id of an augmented-side node ("x0", "y2", "dx0", "dy1").
std::string side_node_id(const SideNode& node);

/// Writes `content` to `path` atomically (temp file + rename).
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace pdqubo
