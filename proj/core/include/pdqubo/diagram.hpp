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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdqubo/rational.hpp"

namespace pdqubo {

/// An off-diagonal feature: born at `birth`, dead at `death`, with
/// death > birth and birth >= 0. Coordinates are exact rationals.
struct DiagramPoint {
    Rational birth;
    Rational death;

    double birth_d() const { return to_double(birth); }
    double death_d() const { return to_double(death); }

    bool operator==(const DiagramPoint&) const = default;
};

/// A finite multiset of off-diagonal points. Duplicates are kept as
/// distinct entries; the diagonal itself is never stored; it enters only
/// through augment() below.
struct PersistenceDiagram {
    std::vector<DiagramPoint> points;
    std::string label;

    std::size_t size() const { return points.size(); }
};

/// Parses the diagram CSV format: UTF-8 text, `#` starts a comment, blank
/// lines are ignored, each data line is `birth,death` with decimal
/// literals. Throws ParseError (malformed line) or DomainError (birth < 0,
/// death <= birth, non-finite values), naming `label` and the line number.
PersistenceDiagram parse_diagram(std::string_view text, std::string label);

/// Reads and parses a diagram file; the label is the path.
PersistenceDiagram load_diagram(const std::string& path);

/// Nearest diagonal point to `a` under the l-inf norm (also under every
/// l-q norm): the midpoint ((b+d)/2, (b+d)/2).
std::pair<Rational, Rational> diagonal_projection(const DiagramPoint& a);

/// One node of an augmented diagram side. Off-diagonal nodes carry their
/// index in their own diagram; diagonal nodes carry the index of the
/// off-diagonal partner (in the opposite diagram) they project. Identity
/// matters: a point may pair only with *its own* projection, even when two
/// projections share coordinates.
struct SideNode {
    enum class Side { kXBar, kYBar };

    Side side;
    bool is_diagonal;
    std::size_t point_index;
    Rational birth;
    Rational death;

    double birth_d() const { return to_double(birth); }
    double death_d() const { return to_double(death); }
};

/// The augmented sides: x_bar holds X's points followed by the projections
/// of Y's points, y_bar holds Y's points followed by the projections of
/// X's points. Both sides have exactly m + n nodes.
struct AugmentedSides {
    std::vector<SideNode> x_bar;
    std::vector<SideNode> y_bar;
    std::size_t m = 0;  // |X|
    std::size_t n = 0;  // |Y|
};

AugmentedSides augment(const PersistenceDiagram& X, const PersistenceDiagram& Y);

}  // namespace pdqubo
