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

#include "pdqubo/diagram.hpp"

#include <fstream>
#include <sstream>

#include "pdqubo/errors.hpp"

namespace pdqubo {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::string where(const std::string& label, std::size_t line) {
    return label + ":" + std::to_string(line) + ": ";
}

}  // namespace

PersistenceDiagram parse_diagram(std::string_view text, std::string label) {
    PersistenceDiagram diagram;
    diagram.label = std::move(label);

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view line = (end == std::string_view::npos)
                                        ? text.substr(start)
                                        : text.substr(start, end - start);
        start = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError(where(diagram.label, line_no) + "expected 'birth,death'");
        }
        const std::string_view birth_text = trim(line.substr(0, comma));
        const std::string_view death_text = trim(line.substr(comma + 1));
        if (death_text.find(',') != std::string_view::npos) {
            throw ParseError(where(diagram.label, line_no) + "too many fields");
        }

        Rational birth, death;
        try {
            birth = rational_from_decimal(birth_text);
            death = rational_from_decimal(death_text);
        } catch (const ParseError& err) {
            throw ParseError(where(diagram.label, line_no) + err.what());
        }

        if (birth < 0) {
            throw DomainError(where(diagram.label, line_no) + "birth must be nonnegative");
        }
        if (death <= birth) {
            throw DomainError(where(diagram.label, line_no) + "death must exceed birth");
        }
        diagram.points.push_back({std::move(birth), std::move(death)});
    }
    return diagram;
}

PersistenceDiagram load_diagram(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_diagram(buffer.str(), path);
}

std::pair<Rational, Rational> diagonal_projection(const DiagramPoint& a) {
    const Rational mid = (a.birth + a.death) / 2;
    return {mid, mid};
}

AugmentedSides augment(const PersistenceDiagram& X, const PersistenceDiagram& Y) {
    AugmentedSides sides;
    sides.m = X.size();
    sides.n = Y.size();
    sides.x_bar.reserve(sides.m + sides.n);
    sides.y_bar.reserve(sides.m + sides.n);

    using Side = SideNode::Side;
    for (std::size_t i = 0; i < X.size(); ++i) {
        sides.x_bar.push_back({Side::kXBar, false, i, X.points[i].birth, X.points[i].death});
    }
    for (std::size_t j = 0; j < Y.size(); ++j) {
        const auto [b, d] = diagonal_projection(Y.points[j]);
        sides.x_bar.push_back({Side::kXBar, true, j, b, d});
    }
    for (std::size_t j = 0; j < Y.size(); ++j) {
        sides.y_bar.push_back({Side::kYBar, false, j, Y.points[j].birth, Y.points[j].death});
    }
    for (std::size_t i = 0; i < X.size(); ++i) {
        const auto [b, d] = diagonal_projection(X.points[i]);
        sides.y_bar.push_back({Side::kYBar, true, i, b, d});
    }
    return sides;
}

}  // namespace pdqubo
