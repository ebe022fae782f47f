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
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "pdqubo/rational.hpp"

namespace pdqubo {

/// A point of the binary hypercube; entries are 0 or 1.
using Assignment = std::vector<std::uint8_t>;

/// A spin configuration; entries are -1 or +1.
using SpinVector = std::vector<std::int8_t>;

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Quadratic polynomial over binary variables:
///   offset + sum_i linear[i] x_i + sum_{i<j} quadratic[i,j] x_i x_j.
///
/// Quadratic keys are strictly ordered (i < j); a diagonal term (i, i, c)
/// folds into the linear part since x^2 = x on binary variables. Zero
/// coefficients are never stored. Instances are safe for concurrent reads
/// once construction is finished.
class QuboModel {
  public:
    QuboModel() = default;
    explicit QuboModel(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const { return num_vars_; }

    const Rational& offset() const { return offset_; }
    void set_offset(Rational value) { offset_ = std::move(value); }

    /// Accumulates onto the linear coefficient of x_i.
    void add_linear(std::size_t i, const Rational& coeff);

    /// Accumulates onto the coefficient of x_i x_j. Accepts i == j and
    /// folds it into the linear part; accepts either index order.
    void add_quadratic(std::size_t i, std::size_t j, const Rational& coeff);

    /// Coefficient lookups; absent terms read as zero.
    Rational linear(std::size_t i) const;
    Rational quadratic(std::size_t i, std::size_t j) const;

    const std::map<std::size_t, Rational>& linear_terms() const { return linear_; }
    const std::map<IndexPair, Rational>& quadratic_terms() const { return quadratic_; }

    bool operator==(const QuboModel& other) const = default;

  private:
    void check_index(std::size_t i) const;

    std::size_t num_vars_ = 0;
    Rational offset_ = 0;
    std::map<std::size_t, Rational> linear_;
    std::map<IndexPair, Rational> quadratic_;
};

/// Ising twin of QuboModel: spin variables in {-1, +1}, fields h_i and
/// couplings J_ij with the same strict i < j key discipline.
class IsingModel {
  public:
    IsingModel() = default;
    explicit IsingModel(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const { return num_vars_; }

    const Rational& offset() const { return offset_; }
    void set_offset(Rational value) { offset_ = std::move(value); }

    void add_field(std::size_t i, const Rational& coeff);

    /// Accumulates onto J_ij. A diagonal coupling (i, i, c) contributes the
    /// constant c because s^2 = 1 for spins.
    void add_coupling(std::size_t i, std::size_t j, const Rational& coeff);

    Rational field(std::size_t i) const;
    Rational coupling(std::size_t i, std::size_t j) const;

    const std::map<std::size_t, Rational>& field_terms() const { return fields_; }
    const std::map<IndexPair, Rational>& coupling_terms() const { return couplings_; }

    bool operator==(const IsingModel& other) const = default;

  private:
    void check_index(std::size_t i) const;

    std::size_t num_vars_ = 0;
    Rational offset_ = 0;
    std::map<std::size_t, Rational> fields_;
    std::map<IndexPair, Rational> couplings_;
};

/// The model viewed as a weighted graph: one node per variable carrying its
/// bias, one edge per nonzero coupling.
struct LogicalGraph {
    struct Node {
        std::size_t index;
        Rational bias;
    };
    struct Edge {
        std::size_t i, j;
        Rational weight;
    };

    std::vector<Node> nodes;
    std::vector<Edge> edges;

    std::size_t num_nodes() const { return nodes.size(); }
    std::size_t num_edges() const { return edges.size(); }
};

/// Exact energy of an assignment. Throws DomainError on length mismatch or
/// entries outside {0, 1}.
Rational evaluate_qubo(const QuboModel& model, std::span<const std::uint8_t> x);

/// Exact energy of a spin configuration; entries must be -1 or +1.
Rational evaluate_ising(const IsingModel& model, std::span<const std::int8_t> s);

/// Change of variables s = 2x - 1. Energies are preserved exactly:
/// evaluate_ising(m, s) == evaluate_qubo(ising_to_qubo(m), (s+1)/2).
QuboModel ising_to_qubo(const IsingModel& ising);

/// Inverse change of variables x = (s + 1) / 2; exact in both directions.
IsingModel qubo_to_ising(const QuboModel& qubo);

/// Graph view of the model (nodes biased by the linear part, edges exactly
/// where quadratic coefficients are nonzero).
LogicalGraph logical_graph(const QuboModel& qubo);

inline constexpr std::size_t kDefaultEnumerationCap = 26;

struct ArgminResult {
    Assignment state;
    Rational energy;  // exact energy of `state`
};

/// Scans all 2^n states and returns a global minimizer. Energies are
/// compared in double precision during the scan (the documented conversion
/// boundary); the returned energy is re-evaluated exactly. Ties are broken
/// toward the first state in counting order with bit 0 as the least
/// significant bit. Throws SizeError above the cap.
ArgminResult argmin_exhaustive(const QuboModel& model,
                               std::size_t cap = kDefaultEnumerationCap);

/// Double-precision view used by the samplers and the exhaustive scan.
/// Coefficient order is fixed by the model's sorted term maps, so energies
/// computed through this view are bit-reproducible.
struct DenseQubo {
    std::size_t num_vars = 0;
    double offset = 0;
    std::vector<double> linear;
    // Symmetric neighbor structure in CSR form.
    std::vector<std::size_t> row_start;
    std::vector<std::uint32_t> neighbor;
    std::vector<double> weight;

    double energy(std::span<const std::uint8_t> x) const;
    /// Energy change of flipping bit i.
    double flip_delta(std::span<const std::uint8_t> x, std::size_t i) const;
};

DenseQubo dense_view(const QuboModel& model);

}  // namespace pdqubo
