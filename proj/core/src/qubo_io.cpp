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

#include "pdqubo/qubo_io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

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

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        if (end > pos) fields.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return fields;
}

std::size_t parse_index(std::string_view field, const std::string& context) {
    std::size_t value = 0;
    if (field.empty()) throw ParseError(context + "empty index");
    for (const char c : field) {
        if (c < '0' || c > '9') throw ParseError(context + "bad index '" + std::string(field) + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
        if (value > 100000000) throw ParseError(context + "index out of range");
    }
    return value;
}

}  // namespace

std::string write_qubo_text(const QuboModel& model) {
    std::ostringstream out;
    out << "qubo " << model.num_vars() << "\n";
    if (model.offset() != 0) {
        out << "offset " << decimal_string(model.offset()) << "\n";
    }

    struct Term {
        std::size_t i, j;
        const Rational* coeff;
    };
    std::vector<Term> terms;
    terms.reserve(model.linear_terms().size() + model.quadratic_terms().size());
    for (const auto& [i, h] : model.linear_terms()) terms.push_back({i, i, &h});
    for (const auto& [ij, j_coeff] : model.quadratic_terms()) {
        terms.push_back({ij.first, ij.second, &j_coeff});
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    for (const auto& term : terms) {
        out << term.i << " " << term.j << " " << decimal_string(*term.coeff) << "\n";
    }
    return out.str();
}

QuboModel parse_qubo_text(std::string_view text, std::string_view source) {
    QuboModel model;
    bool saw_header = false;
    bool saw_offset = false;

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
        const std::string context =
                std::string(source) + ":" + std::to_string(line_no) + ": ";

        const auto fields = split_fields(line);
        if (!saw_header) {
            if (fields.size() != 2 || fields[0] != "qubo") {
                throw ParseError(context + "expected 'qubo <num_vars>'");
            }
            model = QuboModel(parse_index(fields[1], context));
            saw_header = true;
            continue;
        }
        if (fields[0] == "offset") {
            if (fields.size() != 2) throw ParseError(context + "expected 'offset <decimal>'");
            if (saw_offset) throw ParseError(context + "duplicate offset line");
            try {
                model.set_offset(rational_from_decimal(fields[1]));
            } catch (const ParseError& err) {
                throw ParseError(context + err.what());
            }
            saw_offset = true;
            continue;
        }
        if (fields.size() != 3) {
            throw ParseError(context + "expected 'i j coeff'");
        }
        const std::size_t i = parse_index(fields[0], context);
        const std::size_t j = parse_index(fields[1], context);
        if (i > j) throw ParseError(context + "term indices must satisfy i <= j");
        if (j >= model.num_vars()) {
            throw ParseError(context + "variable index " + std::to_string(j) +
                             " out of range (num_vars=" + std::to_string(model.num_vars()) + ")");
        }
        Rational coeff;
        try {
            coeff = rational_from_decimal(fields[2]);
        } catch (const ParseError& err) {
            throw ParseError(context + err.what());
        }
        if (i == j) {
            model.add_linear(i, coeff);
        } else {
            model.add_quadratic(i, j, coeff);
        }
    }
    if (!saw_header) {
        throw ParseError(std::string(source) + ": missing 'qubo <num_vars>' header");
    }
    return model;
}

QuboModel load_qubo(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_qubo_text(buffer.str(), path);
}

std::string side_node_id(const SideNode& node) {
    const bool x_side = (node.side == SideNode::Side::kXBar);
    std::string id;
    if (node.is_diagonal) {
        // Projections live on the side opposite their partner.
        id = x_side ? "dy" : "dx";
    } else {
        id = x_side ? "x" : "y";
    }
    return id + std::to_string(node.point_index);
}

std::string write_edge_map(const WassersteinGraph& graph) {
    std::ostringstream out;
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const WassersteinEdge& edge = graph.edges[e];
        const SideNode& u = graph.sides.x_bar[edge.u];
        const SideNode& v = graph.sides.y_bar[edge.v];
        // E3 edges are listed point-first like E1/E2.
        const bool swap = u.is_diagonal;
        out << e << " " << edge_class_name(edge.cls) << " "
            << side_node_id(swap ? v : u) << " " << side_node_id(swap ? u : v) << " "
            << decimal_string(edge.theta) << "\n";
    }
    return out.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
    const std::string temp = path + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(temp + ": cannot open for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error(temp + ": write failed");
    }
    if (std::rename(temp.c_str(), path.c_str()) != 0) {
        throw Error(path + ": rename failed: " + std::strerror(errno));
    }
}

}  // namespace pdqubo
