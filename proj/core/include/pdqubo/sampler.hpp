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

#include <cstdint>
#include <random>
#include <vector>

#include "pdqubo/model.hpp"

namespace pdqubo {

/// Inverse-temperature schedule, the classical stand-in for the annealing
/// parameter. Forward runs ramp beta_start -> beta_end (nondecreasing).
/// Reverse runs descend beta_start -> beta_mid (heating), hold for
/// pause_sweeps, then ascend beta_mid -> beta_end (cooling).
struct Schedule {
    enum class Kind { kForward, kReverse };

    Kind kind = Kind::kForward;
    double beta_start = 0.1;
    double beta_end = 10.0;
    double beta_mid = 0.0;  // reverse only
    std::int64_t sweeps = 1000;
    std::int64_t pause_sweeps = 0;  // reverse only

    /// Throws DomainError unless the monotonicity invariants hold.
    void validate() const;

    /// Per-sweep beta values (geometric interpolation between the anchor
    /// points; the ramp is exponential in sweep index).
    std::vector<double> beta_path() const;
};

struct SampleRecord {
    Assignment state;
    double energy;  // double view of the model energy (see DenseQubo)
    std::uint64_t count;
};

/// Aggregated sampler output: unique states with multiplicities, sorted
/// ascending by energy, ties by lexicographic state. Counts sum to
/// num_reads.
struct SampleSet {
    std::vector<SampleRecord> records;
    std::uint64_t seed = 0;
    Schedule schedule;
    std::uint64_t num_reads = 0;

    /// First (lowest-energy) record; throws DomainError when empty.
    const SampleRecord& best() const;
    std::uint64_t total_count() const;
};

/// Fixed-temperature single-site Metropolis. One sweep proposes num_vars
/// uniformly random bit flips, each accepted with min(1, exp(-beta *
/// delta)). The state at the end of each sweep after the burn-in fraction
/// is recorded. Fully deterministic given the seed; the RNG is mt19937_64
/// with one stream derived from (seed, 0).
SampleSet metropolis_chain(const QuboModel& model, double beta, std::int64_t sweeps,
                           std::uint64_t seed, double burn_in_fraction = 0.25);

/// Forward annealing: num_reads independent restarts from uniform random
/// states, each sweeping the geometric beta ramp; the final state of each
/// read is recorded. Read r uses its own RNG stream derived from
/// (seed, r), so any execution order yields the same SampleSet.
SampleSet anneal(const QuboModel& model, const Schedule& schedule, std::uint64_t num_reads,
                 std::uint64_t seed);

/// Reverse annealing: every read starts from `initial`, heats to beta_mid,
/// optionally pauses, and re-cools to beta_end. Local search in Hamming
/// distance around `initial` for mild beta_mid.
SampleSet reverse_anneal(const QuboModel& model, const Assignment& initial,
                         const Schedule& schedule, std::uint64_t num_reads, std::uint64_t seed);

/// Energies bucketed by exact value (no binning), ascending, with summed
/// occurrence counts.
std::vector<std::pair<double, std::uint64_t>> histogram(const SampleSet& samples);

/// Default forward schedule derived from the coefficient scales of the
/// model; documented heuristics, not claimed optimal.
Schedule default_forward_schedule(const QuboModel& model);

/// Default reverse schedule: cold endpoints from the forward default, with
/// a mid-anneal excursion hot enough to hop local barriers.
Schedule default_reverse_schedule(const QuboModel& model);

namespace rng {

/// SplitMix64 step; used to derive per-read seeds from (master, index).
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform in [0, 1) from the top 53 bits (portable across platforms,
/// unlike std::uniform_real_distribution).
double uniform_01(std::mt19937_64& engine);

/// Uniform index in [0, n) via the multiply-shift reduction.
std::size_t uniform_index(std::mt19937_64& engine, std::size_t n);

/// In-place Fisher-Yates shuffle (std::shuffle is implementation-defined).
template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& engine) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::swap(values[i - 1], values[uniform_index(engine, i)]);
    }
}

}  // namespace rng

}  // namespace pdqubo
