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

#include "pdqubo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pdqubo/errors.hpp"
#include "pdqubo/wasserstein.hpp"

namespace pdqubo {

namespace {

// Admissibility and weights for the augmented (m+n) x (m+n) matrix.
// Row i indexes x_bar, column j indexes y_bar. Inadmissible pairs are
// signalled with a negative weight.
struct CostTable {
    std::size_t size = 0;
    std::size_t m = 0, n = 0;
    std::vector<double> weights;  // row-major; -1 marks inadmissible
    double finite_sum = 0;

    double at(std::size_t i, std::size_t j) const { return weights[i * size + j]; }
    bool admissible(std::size_t i, std::size_t j) const { return at(i, j) >= 0; }
};

CostTable build_cost_table(const PersistenceDiagram& X, const PersistenceDiagram& Y, double p,
                           double q) {
    const AugmentedSides sides = augment(X, Y);
    CostTable table;
    table.m = sides.m;
    table.n = sides.n;
    table.size = sides.m + sides.n;
    table.weights.assign(table.size * table.size, -1.0);

    for (std::size_t i = 0; i < table.size; ++i) {
        const SideNode& u = sides.x_bar[i];
        for (std::size_t j = 0; j < table.size; ++j) {
            const SideNode& v = sides.y_bar[j];
            double w = -1.0;
            if (u.is_diagonal && v.is_diagonal) {
                w = 0.0;  // leftover projections pair off for free
            } else if (!u.is_diagonal && !v.is_diagonal) {
                w = to_double(edge_weight(u, v, p, q));
            } else if (!u.is_diagonal && v.is_diagonal && v.point_index == u.point_index) {
                w = to_double(edge_weight(u, v, p, q));
            } else if (u.is_diagonal && !v.is_diagonal && u.point_index == v.point_index) {
                w = to_double(edge_weight(u, v, p, q));
            }
            table.weights[i * table.size + j] = w;
            if (w > 0) table.finite_sum += w;
        }
    }
    return table;
}

OracleResult finish(double cost, double p, std::vector<std::size_t> matching) {
    OracleResult result;
    result.cost = cost;
    result.distance = cost <= 0 ? 0.0 : std::pow(cost, 1.0 / p);
    result.matching = std::move(matching);
    return result;
}

}  // namespace

OracleResult brute_force_distance(const PersistenceDiagram& X, const PersistenceDiagram& Y,
                                  double p, double q) {
    const std::size_t total = X.size() + Y.size();
    if (total > kBruteForceCap) {
        throw SizeError("brute-force enumeration over " + std::to_string(total) +
                        " augmented points exceeds the cap of " +
                        std::to_string(kBruteForceCap));
    }
    if (total == 0) return finish(0.0, p, {});

    const CostTable table = build_cost_table(X, Y, p, q);

    std::vector<std::size_t> current(total, 0), best(total, 0);
    std::vector<bool> used(total, false);
    double best_cost = std::numeric_limits<double>::infinity();
    bool found = false;

    // Depth-first over x_bar rows, columns tried in index order, so the
    // first optimal matching in lexicographic enumeration order wins.
    const auto recurse = [&](auto&& self, std::size_t row, double cost) -> void {
        if (cost >= best_cost) return;  // keeps the earliest optimum
        if (row == total) {
            best_cost = cost;
            best = current;
            found = true;
            return;
        }
        for (std::size_t j = 0; j < total; ++j) {
            if (used[j] || !table.admissible(row, j)) continue;
            used[j] = true;
            current[row] = j;
            self(self, row + 1, cost + table.at(row, j));
            used[j] = false;
        }
    };
    recurse(recurse, 0, 0.0);

    if (!found) throw DomainError("no perfect matching exists on the augmented sides");
    return finish(best_cost, p, std::move(best));
}

OracleResult hungarian_distance(const PersistenceDiagram& X, const PersistenceDiagram& Y,
                                double p, double q) {
    const std::size_t total = X.size() + Y.size();
    if (total == 0) return finish(0.0, p, {});

    const CostTable table = build_cost_table(X, Y, p, q);
    const double big = table.finite_sum + 1.0;

    // Kuhn-Munkres with potentials, O(n^3); 1-based work arrays.
    const std::size_t n = total;
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> min_value(n + 1, std::numeric_limits<double>::infinity());
        std::vector<bool> visited(n + 1, false);
        do {
            visited[j0] = true;
            const std::size_t i0 = match[j0];
            std::size_t j1 = 0;
            double delta = std::numeric_limits<double>::infinity();
            for (std::size_t j = 1; j <= n; ++j) {
                if (visited[j]) continue;
                const double raw = table.admissible(i0 - 1, j - 1) ? table.at(i0 - 1, j - 1) : big;
                const double current = raw - u[i0] - v[j];
                if (current < min_value[j]) {
                    min_value[j] = current;
                    way[j] = j0;
                }
                if (min_value[j] < delta) {
                    delta = min_value[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (visited[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_value[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<std::size_t> assignment(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        assignment[match[j] - 1] = j - 1;
    }
    // Summed in row order so equal matchings cost bit-identically to the
    // brute-force path.
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cost += table.admissible(i, assignment[i]) ? table.at(i, assignment[i]) : big;
    }
    return finish(cost, p, std::move(assignment));
}

double matching_cost(const PersistenceDiagram& X, const PersistenceDiagram& Y,
                     const std::vector<std::size_t>& matching, double p, double q) {
    const std::size_t total = X.size() + Y.size();
    if (matching.size() != total) {
        throw DomainError("matching must cover every node of the augmented sides");
    }
    std::vector<bool> used(total, false);
    for (const std::size_t j : matching) {
        if (j >= total || used[j]) {
            throw DomainError("matching is not a bijection between the augmented sides");
        }
        used[j] = true;
    }

    const CostTable table = build_cost_table(X, Y, p, q);
    double cost = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
        if (!table.admissible(i, matching[i])) {
            throw DomainError("matching pairs a point with a foreign projection");
        }
        cost += table.at(i, matching[i]);
    }
    return cost;
}

}  // namespace pdqubo
