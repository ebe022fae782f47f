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

#include "pdqubo/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pdqubo/errors.hpp"

namespace pdqubo {

namespace rng {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master;
    std::uint64_t mixed = splitmix64(state);
    state = mixed ^ index;
    return splitmix64(state);
}

double uniform_01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& engine, std::size_t n) {
    return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(engine()) * n) >> 64);
}

}  // namespace rng

void Schedule::validate() const {
    if (!(beta_start > 0) || !(beta_end > 0)) {
        throw DomainError("schedule inverse temperatures must be positive");
    }
    if (sweeps < 1) throw DomainError("schedule must have at least one sweep");
    if (kind == Kind::kForward) {
        if (beta_end < beta_start) {
            throw DomainError("forward schedule requires beta_start <= beta_end");
        }
        if (pause_sweeps != 0) {
            throw DomainError("pause sweeps apply to reverse schedules only");
        }
    } else {
        if (!(beta_mid > 0)) {
            throw DomainError("reverse schedule requires a positive beta_mid");
        }
        if (beta_mid > beta_start || beta_mid > beta_end) {
            throw DomainError("reverse schedule requires beta_mid <= beta_start and <= beta_end");
        }
        if (pause_sweeps < 0 || pause_sweeps > sweeps) {
            throw DomainError("pause sweeps must lie within the sweep budget");
        }
    }
}

namespace {

// Geometric ramp from `from` to `to` over `count` sweeps, inclusive of
// both endpoints when count > 1.
void append_ramp(std::vector<double>& path, double from, double to, std::int64_t count) {
    if (count <= 0) return;
    if (count == 1) {
        path.push_back(to);
        return;
    }
    const double ratio = std::log(to / from);
    for (std::int64_t t = 0; t < count; ++t) {
        path.push_back(from * std::exp(ratio * static_cast<double>(t) /
                                       static_cast<double>(count - 1)));
    }
}

}  // namespace

std::vector<double> Schedule::beta_path() const {
    validate();
    std::vector<double> path;
    path.reserve(static_cast<std::size_t>(sweeps));
    if (kind == Kind::kForward) {
        append_ramp(path, beta_start, beta_end, sweeps);
        return path;
    }
    const std::int64_t moving = sweeps - pause_sweeps;
    const std::int64_t descend = (moving + 1) / 2;
    const std::int64_t ascend = moving - descend;
    append_ramp(path, beta_start, beta_mid, descend);
    path.insert(path.end(), static_cast<std::size_t>(pause_sweeps), beta_mid);
    append_ramp(path, beta_mid, beta_end, ascend);
    return path;
}

const SampleRecord& SampleSet::best() const {
    if (records.empty()) throw DomainError("sample set is empty");
    return records.front();
}

std::uint64_t SampleSet::total_count() const {
    std::uint64_t total = 0;
    for (const auto& record : records) total += record.count;
    return total;
}

namespace {

void check_bits(const Assignment& x, std::size_t num_vars) {
    if (x.size() != num_vars) {
        throw DomainError("initial state length does not match the variable count");
    }
    for (const auto bit : x) {
        if (bit > 1) throw DomainError("initial state entries must be 0 or 1");
    }
}

// One sweep: num_vars single-site proposals at inverse temperature beta.
void metropolis_sweep(const DenseQubo& dense, Assignment& x, double beta,
                      std::mt19937_64& engine) {
    const std::size_t n = dense.num_vars;
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t i = rng::uniform_index(engine, n);
        const double delta = dense.flip_delta(x, i);
        if (delta <= 0 || rng::uniform_01(engine) < std::exp(-beta * delta)) {
            x[i] ^= 1;
        }
    }
}

Assignment random_state(std::size_t n, std::mt19937_64& engine) {
    Assignment x(n);
    for (auto& bit : x) bit = static_cast<std::uint8_t>(engine() & 1u);
    return x;
}

SampleSet aggregate(const DenseQubo& dense, std::map<Assignment, std::uint64_t>&& counts,
                    std::uint64_t seed, const Schedule& schedule, std::uint64_t num_reads) {
    SampleSet samples;
    samples.seed = seed;
    samples.schedule = schedule;
    samples.num_reads = num_reads;
    samples.records.reserve(counts.size());
    for (auto& [state, count] : counts) {
        samples.records.push_back({state, dense.energy(state), count});
    }
    std::stable_sort(samples.records.begin(), samples.records.end(),
                     [](const SampleRecord& a, const SampleRecord& b) {
                         if (a.energy != b.energy) return a.energy < b.energy;
                         return a.state < b.state;
                     });
    return samples;
}

}  // namespace

SampleSet metropolis_chain(const QuboModel& model, double beta, std::int64_t sweeps,
                           std::uint64_t seed, double burn_in_fraction) {
    if (!(beta > 0)) throw DomainError("beta must be positive");
    if (sweeps < 1) throw DomainError("at least one sweep is required");
    if (burn_in_fraction < 0 || burn_in_fraction >= 1) {
        throw DomainError("burn-in fraction must lie in [0, 1)");
    }

    const DenseQubo dense = dense_view(model);
    std::mt19937_64 engine(rng::derive_seed(seed, 0));
    Assignment x = random_state(dense.num_vars, engine);

    const auto burn_in = static_cast<std::int64_t>(
            std::floor(burn_in_fraction * static_cast<double>(sweeps)));
    std::map<Assignment, std::uint64_t> counts;
    std::uint64_t recorded = 0;
    for (std::int64_t sweep = 0; sweep < sweeps; ++sweep) {
        metropolis_sweep(dense, x, beta, engine);
        if (sweep >= burn_in) {
            ++counts[x];
            ++recorded;
        }
    }

    Schedule descriptor;
    descriptor.kind = Schedule::Kind::kForward;
    descriptor.beta_start = beta;
    descriptor.beta_end = beta;
    descriptor.sweeps = sweeps;
    return aggregate(dense, std::move(counts), seed, descriptor, recorded);
}

SampleSet anneal(const QuboModel& model, const Schedule& schedule, std::uint64_t num_reads,
                 std::uint64_t seed) {
    if (schedule.kind != Schedule::Kind::kForward) {
        throw DomainError("anneal expects a forward schedule");
    }
    if (num_reads < 1) throw DomainError("at least one read is required");
    const std::vector<double> betas = schedule.beta_path();
    const DenseQubo dense = dense_view(model);

    std::map<Assignment, std::uint64_t> counts;
    for (std::uint64_t read = 0; read < num_reads; ++read) {
        std::mt19937_64 engine(rng::derive_seed(seed, read));
        Assignment x = random_state(dense.num_vars, engine);
        for (const double beta : betas) {
            metropolis_sweep(dense, x, beta, engine);
        }
        ++counts[x];
    }
    return aggregate(dense, std::move(counts), seed, schedule, num_reads);
}

SampleSet reverse_anneal(const QuboModel& model, const Assignment& initial,
                         const Schedule& schedule, std::uint64_t num_reads,
                         std::uint64_t seed) {
    if (schedule.kind != Schedule::Kind::kReverse) {
        throw DomainError("reverse_anneal expects a reverse schedule");
    }
    if (num_reads < 1) throw DomainError("at least one read is required");
    check_bits(initial, model.num_vars());
    const std::vector<double> betas = schedule.beta_path();
    const DenseQubo dense = dense_view(model);

    std::map<Assignment, std::uint64_t> counts;
    for (std::uint64_t read = 0; read < num_reads; ++read) {
        std::mt19937_64 engine(rng::derive_seed(seed, read));
        Assignment x = initial;
        for (const double beta : betas) {
            metropolis_sweep(dense, x, beta, engine);
        }
        ++counts[x];
    }
    return aggregate(dense, std::move(counts), seed, schedule, num_reads);
}

std::vector<std::pair<double, std::uint64_t>> histogram(const SampleSet& samples) {
    std::map<double, std::uint64_t> buckets;
    for (const auto& record : samples.records) {
        buckets[record.energy] += record.count;
    }
    return {buckets.begin(), buckets.end()};
}

namespace {

struct CoefficientScales {
    double mean_abs = 1.0;
    double max_abs = 1.0;
    double min_abs = 1.0;  // smallest nonzero magnitude
};

CoefficientScales coefficient_scales(const QuboModel& model) {
    double sum = 0;
    double max_abs = 0;
    double min_abs = std::numeric_limits<double>::infinity();
    std::size_t count = 0;
    const auto visit = [&](const Rational& coeff) {
        const double a = std::fabs(to_double(coeff));
        if (a == 0) return;
        sum += a;
        max_abs = std::max(max_abs, a);
        min_abs = std::min(min_abs, a);
        ++count;
    };
    for (const auto& [i, h] : model.linear_terms()) visit(h);
    for (const auto& [ij, j_coeff] : model.quadratic_terms()) visit(j_coeff);

    CoefficientScales scales;
    if (count > 0) {
        scales.mean_abs = sum / static_cast<double>(count);
        scales.max_abs = max_abs;
        // Guard against pathological dynamic ranges.
        scales.min_abs = std::max(min_abs, 1e-9 * max_abs);
    }
    return scales;
}

}  // namespace

Schedule default_forward_schedule(const QuboModel& model) {
    const CoefficientScales scales = coefficient_scales(model);
    Schedule schedule;
    schedule.kind = Schedule::Kind::kForward;
    schedule.beta_start = 0.1 / scales.mean_abs;
    // The smallest nonzero coefficient is the cheap proxy for the smallest
    // energy gap the walk must resolve at the cold end.
    schedule.beta_end = std::max(10.0 / scales.min_abs, 2.0 * schedule.beta_start);
    schedule.sweeps = 1000;
    return schedule;
}

Schedule default_reverse_schedule(const QuboModel& model) {
    const Schedule forward = default_forward_schedule(model);
    Schedule schedule;
    schedule.kind = Schedule::Kind::kReverse;
    schedule.beta_start = forward.beta_end;
    schedule.beta_end = forward.beta_end;
    // Hot enough to cross local barriers a few coefficients tall.
    schedule.beta_mid = forward.beta_start;
    schedule.sweeps = 1000;
    schedule.pause_sweeps = 250;
    return schedule;
}

}  // namespace pdqubo
