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

#include "pdqubo/model.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pdqubo/errors.hpp"

namespace pdqubo {

namespace {

void check_length(std::size_t expected, std::size_t got) {
    if (expected != got) {
        throw DomainError("assignment length " + std::to_string(got) +
                          " does not match variable count " + std::to_string(expected));
    }
}

}  // namespace

void QuboModel::check_index(std::size_t i) const {
    if (i >= num_vars_) {
        throw DomainError("variable index " + std::to_string(i) + " out of range (num_vars=" +
                          std::to_string(num_vars_) + ")");
    }
}

void QuboModel::add_linear(std::size_t i, const Rational& coeff) {
    check_index(i);
    Rational& slot = linear_[i];
    slot += coeff;
    if (slot == 0) linear_.erase(i);
}

void QuboModel::add_quadratic(std::size_t i, std::size_t j, const Rational& coeff) {
    check_index(i);
    check_index(j);
    if (i == j) {
        // x^2 = x on binary variables, so the term folds into the linear part.
        add_linear(i, coeff);
        return;
    }
    if (i > j) std::swap(i, j);
    Rational& slot = quadratic_[{i, j}];
    slot += coeff;
    if (slot == 0) quadratic_.erase({i, j});
}

Rational QuboModel::linear(std::size_t i) const {
    check_index(i);
    const auto it = linear_.find(i);
    return it == linear_.end() ? Rational(0) : it->second;
}

Rational QuboModel::quadratic(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i > j) std::swap(i, j);
    const auto it = quadratic_.find({i, j});
    return it == quadratic_.end() ? Rational(0) : it->second;
}

void IsingModel::check_index(std::size_t i) const {
    if (i >= num_vars_) {
        throw DomainError("spin index " + std::to_string(i) + " out of range (num_vars=" +
                          std::to_string(num_vars_) + ")");
    }
}

void IsingModel::add_field(std::size_t i, const Rational& coeff) {
    check_index(i);
    Rational& slot = fields_[i];
    slot += coeff;
    if (slot == 0) fields_.erase(i);
}

void IsingModel::add_coupling(std::size_t i, std::size_t j, const Rational& coeff) {
    check_index(i);
    check_index(j);
    if (i == j) {
        // s^2 = 1, a constant.
        offset_ += coeff;
        return;
    }
    if (i > j) std::swap(i, j);
    Rational& slot = couplings_[{i, j}];
    slot += coeff;
    if (slot == 0) couplings_.erase({i, j});
}

Rational IsingModel::field(std::size_t i) const {
    check_index(i);
    const auto it = fields_.find(i);
    return it == fields_.end() ? Rational(0) : it->second;
}

Rational IsingModel::coupling(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i > j) std::swap(i, j);
    const auto it = couplings_.find({i, j});
    return it == couplings_.end() ? Rational(0) : it->second;
}

Rational evaluate_qubo(const QuboModel& model, std::span<const std::uint8_t> x) {
    check_length(model.num_vars(), x.size());
    for (const auto bit : x) {
        if (bit > 1) throw DomainError("assignment entries must be 0 or 1");
    }
    Rational energy = model.offset();
    for (const auto& [i, h] : model.linear_terms()) {
        if (x[i]) energy += h;
    }
    for (const auto& [ij, j_coeff] : model.quadratic_terms()) {
        if (x[ij.first] && x[ij.second]) energy += j_coeff;
    }
    return energy;
}

Rational evaluate_ising(const IsingModel& model, std::span<const std::int8_t> s) {
    check_length(model.num_vars(), s.size());
    for (const auto spin : s) {
        if (spin != -1 && spin != 1) throw DomainError("spin entries must be -1 or +1");
    }
    Rational energy = model.offset();
    for (const auto& [i, h] : model.field_terms()) {
        energy += (s[i] > 0) ? h : -h;
    }
    for (const auto& [ij, j_coeff] : model.coupling_terms()) {
        energy += (s[ij.first] == s[ij.second]) ? j_coeff : -j_coeff;
    }
    return energy;
}

QuboModel ising_to_qubo(const IsingModel& ising) {
    // Substitute s_i = 2 x_i - 1 and expand.
    QuboModel qubo(ising.num_vars());
    Rational offset = ising.offset();
    for (const auto& [i, h] : ising.field_terms()) {
        qubo.add_linear(i, 2 * h);
        offset -= h;
    }
    for (const auto& [ij, j_coeff] : ising.coupling_terms()) {
        qubo.add_quadratic(ij.first, ij.second, 4 * j_coeff);
        qubo.add_linear(ij.first, -2 * j_coeff);
        qubo.add_linear(ij.second, -2 * j_coeff);
        offset += j_coeff;
    }
    qubo.set_offset(offset);
    return qubo;
}

IsingModel qubo_to_ising(const QuboModel& qubo) {
    // Substitute x_i = (s_i + 1) / 2 and expand.
    IsingModel ising(qubo.num_vars());
    Rational offset = qubo.offset();
    for (const auto& [i, h] : qubo.linear_terms()) {
        ising.add_field(i, h / 2);
        offset += h / 2;
    }
    for (const auto& [ij, j_coeff] : qubo.quadratic_terms()) {
        ising.add_coupling(ij.first, ij.second, j_coeff / 4);
        ising.add_field(ij.first, j_coeff / 4);
        ising.add_field(ij.second, j_coeff / 4);
        offset += j_coeff / 4;
    }
    ising.set_offset(offset);
    return ising;
}

LogicalGraph logical_graph(const QuboModel& qubo) {
    LogicalGraph graph;
    graph.nodes.reserve(qubo.num_vars());
    for (std::size_t i = 0; i < qubo.num_vars(); ++i) {
        graph.nodes.push_back({i, qubo.linear(i)});
    }
    graph.edges.reserve(qubo.quadratic_terms().size());
    for (const auto& [ij, j_coeff] : qubo.quadratic_terms()) {
        graph.edges.push_back({ij.first, ij.second, j_coeff});
    }
    return graph;
}

DenseQubo dense_view(const QuboModel& model) {
    DenseQubo dense;
    dense.num_vars = model.num_vars();
    dense.offset = to_double(model.offset());
    dense.linear.assign(dense.num_vars, 0.0);
    for (const auto& [i, h] : model.linear_terms()) {
        dense.linear[i] = to_double(h);
    }

    std::vector<std::size_t> degree(dense.num_vars, 0);
    for (const auto& [ij, j_coeff] : model.quadratic_terms()) {
        ++degree[ij.first];
        ++degree[ij.second];
    }
    dense.row_start.assign(dense.num_vars + 1, 0);
    for (std::size_t i = 0; i < dense.num_vars; ++i) {
        dense.row_start[i + 1] = dense.row_start[i] + degree[i];
    }
    dense.neighbor.resize(dense.row_start.back());
    dense.weight.resize(dense.row_start.back());
    std::vector<std::size_t> cursor(dense.row_start.begin(), dense.row_start.end() - 1);
    for (const auto& [ij, j_coeff] : model.quadratic_terms()) {
        const double w = to_double(j_coeff);
        dense.neighbor[cursor[ij.first]] = static_cast<std::uint32_t>(ij.second);
        dense.weight[cursor[ij.first]++] = w;
        dense.neighbor[cursor[ij.second]] = static_cast<std::uint32_t>(ij.first);
        dense.weight[cursor[ij.second]++] = w;
    }
    return dense;
}

double DenseQubo::energy(std::span<const std::uint8_t> x) const {
    check_length(num_vars, x.size());
    double total = offset;
    for (std::size_t i = 0; i < num_vars; ++i) {
        if (!x[i]) continue;
        total += linear[i];
        // Each quadratic term counted once via the higher-index endpoint.
        for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k) {
            const std::uint32_t j = neighbor[k];
            if (j < i && x[j]) total += weight[k];
        }
    }
    return total;
}

double DenseQubo::flip_delta(std::span<const std::uint8_t> x, std::size_t i) const {
    double field = linear[i];
    for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k) {
        if (x[neighbor[k]]) field += weight[k];
    }
    return x[i] ? -field : field;
}

ArgminResult argmin_exhaustive(const QuboModel& model, std::size_t cap) {
    const std::size_t n = model.num_vars();
    if (n > cap) {
        throw SizeError("exhaustive argmin over " + std::to_string(n) +
                        " variables exceeds the cap of " + std::to_string(cap));
    }

    const DenseQubo dense = dense_view(model);
    Assignment x(n, 0);
    double energy = dense.offset;

    Assignment best_state = x;
    double best_energy = energy;
    std::uint64_t best_rank = 0;

    // Gray-code walk: step k flips bit ctz(k); the visited state has
    // counting rank k ^ (k >> 1) with bit 0 least significant.
    const std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(k));
        energy += dense.flip_delta(x, i);
        x[i] ^= 1;
        const std::uint64_t rank = k ^ (k >> 1);
        if (energy < best_energy || (energy == best_energy && rank < best_rank)) {
            best_energy = energy;
            best_rank = rank;
            best_state = x;
        }
    }
    return {best_state, evaluate_qubo(model, best_state)};
}

}  // namespace pdqubo
