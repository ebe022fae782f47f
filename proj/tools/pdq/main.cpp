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

// pdq: persistence diagrams -> QUBO -> annealing emulators, with exact
// oracles, Chimera graph generation, and minor embedding.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdqubo/chimera.hpp"
#include "pdqubo/diagram.hpp"
#include "pdqubo/embedding.hpp"
#include "pdqubo/errors.hpp"
#include "pdqubo/model.hpp"
#include "pdqubo/oracle.hpp"
#include "pdqubo/qubo_io.hpp"
#include "pdqubo/sampler.hpp"
#include "pdqubo/wasserstein.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pdqubo;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;   // domain / parse errors
constexpr int kExitSize = 2;     // size / cap errors
constexpr int kExitNoEmbed = 3;  // embedding failure

struct GlobalOptions {
    double p = 2.0;
    std::string q_text = "2";
    std::string gamma_text;
    std::uint64_t seed = 0;
    bool quiet = false;
    bool json = false;

    double q() const {
        if (q_text == "inf" || q_text == "infinity") return kInfinity;
        try {
            return to_double(rational_from_decimal(q_text));
        } catch (const ParseError&) {
            throw DomainError("--q must be a decimal value or 'inf'");
        }
    }

    std::optional<Rational> gamma() const {
        if (gamma_text.empty()) return std::nullopt;
        try {
            return rational_from_decimal(gamma_text);
        } catch (const ParseError&) {
            throw DomainError("--gamma must be a decimal value");
        }
    }
};

struct SamplerOptions {
    std::uint64_t reads = 1000;
    std::int64_t sweeps = 0;  // 0 = schedule default
    double beta_start = 0;
    double beta_end = 0;
    double beta_mid = 0;
    std::int64_t pause = -1;
    std::string schedule_name = "forward";
    std::string initial_bits;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--reads", reads, "Number of anneal reads");
        cmd->add_option("--sweeps", sweeps, "Sweeps per read");
        cmd->add_option("--beta-start", beta_start, "Initial inverse temperature");
        cmd->add_option("--beta-end", beta_end, "Final inverse temperature");
        cmd->add_option("--beta-mid", beta_mid, "Mid-anneal inverse temperature (reverse)");
        cmd->add_option("--pause", pause, "Pause sweeps at beta-mid (reverse)");
        cmd->add_option("--schedule", schedule_name, "Schedule kind: forward or reverse")
                ->check(CLI::IsMember({"forward", "reverse"}));
        cmd->add_option("--initial", initial_bits, "Initial state bit string (reverse)");
    }

    Schedule make_schedule(const QuboModel& model) const {
        Schedule schedule = (schedule_name == "reverse") ? default_reverse_schedule(model)
                                                         : default_forward_schedule(model);
        if (sweeps > 0) schedule.sweeps = sweeps;
        if (beta_start > 0) schedule.beta_start = beta_start;
        if (beta_end > 0) schedule.beta_end = beta_end;
        if (beta_mid > 0) schedule.beta_mid = beta_mid;
        if (pause >= 0) schedule.pause_sweeps = pause;
        return schedule;
    }
};

Assignment parse_bits(const std::string& text, std::size_t expected) {
    Assignment bits;
    bits.reserve(text.size());
    for (const char c : text) {
        if (c != '0' && c != '1') {
            throw ParseError("--initial expects a string of 0s and 1s");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (bits.size() != expected) {
        throw DomainError("--initial has " + std::to_string(bits.size()) +
                          " bits but the model has " + std::to_string(expected) + " variables");
    }
    return bits;
}

std::string bits_to_string(const Assignment& bits) {
    std::string text;
    text.reserve(bits.size());
    for (const auto bit : bits) text.push_back(bit ? '1' : '0');
    return text;
}

std::string samples_jsonl(const SampleSet& samples) {
    std::ostringstream out;
    for (const auto& record : samples.records) {
        out << "{\"state\":\"" << bits_to_string(record.state) << "\",\"energy\":"
            << double_string(record.energy) << ",\"count\":" << record.count << "}\n";
    }
    return out.str();
}

std::string histogram_csv(const SampleSet& samples) {
    std::ostringstream out;
    out << "energy,occurrences\n";
    for (const auto& [energy, occurrences] : histogram(samples)) {
        out << double_string(energy) << "," << occurrences << "\n";
    }
    return out.str();
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_file_atomic(path, content);
    }
}

Rational choose_gamma(const WassersteinGraph& graph, const GlobalOptions& global) {
    if (const auto gamma = global.gamma()) return *gamma;
    if (graph.edges.empty()) return 1;  // vacuous; any positive value
    return default_gamma(graph);
}

ordered_json summary_json(double cost, double distance, std::size_t n_vars,
                          const std::string& method, std::size_t violations) {
    ordered_json summary;
    summary["cost"] = cost;
    summary["distance"] = distance;
    summary["n_vars"] = n_vars;
    summary["method"] = method;
    summary["constraint_violations"] = violations;
    return summary;
}

int run_pd2qubo(const GlobalOptions& global, const std::string& x_path,
                const std::string& y_path, const std::string& out_prefix) {
    const PersistenceDiagram X = load_diagram(x_path);
    const PersistenceDiagram Y = load_diagram(y_path);
    const WassersteinGraph graph = build_wasserstein_graph(X, Y, global.p, global.q());
    const Rational gamma = choose_gamma(graph, global);
    const CompiledQubo compiled = compile_qubo(graph, gamma);

    write_file_atomic(out_prefix + ".qubo", write_qubo_text(compiled.model));
    write_file_atomic(out_prefix + ".map", write_edge_map(graph));
    if (!global.quiet) {
        std::cout << "variables: " << compiled.model.num_vars() << "\n"
                  << "gamma: " << decimal_string(gamma) << "\n"
                  << "wrote: " << out_prefix << ".qubo, " << out_prefix << ".map\n";
    }
    return kExitOk;
}

int run_wasserstein(const GlobalOptions& global, const SamplerOptions& sampler,
                    const std::string& x_path, const std::string& y_path, bool force_exact,
                    bool force_sa, bool check_oracle) {
    const PersistenceDiagram X = load_diagram(x_path);
    const PersistenceDiagram Y = load_diagram(y_path);
    const double q = global.q();
    const WassersteinGraph graph = build_wasserstein_graph(X, Y, global.p, q);
    const Rational gamma = choose_gamma(graph, global);
    const CompiledQubo compiled = compile_qubo(graph, gamma);
    const std::size_t n_vars = compiled.model.num_vars();

    const bool exact = force_exact || (!force_sa && n_vars <= kDefaultEnumerationCap);
    std::string method;
    Assignment best_state;
    if (exact) {
        method = "exact";
        best_state = argmin_exhaustive(compiled.model).state;  // SizeError above the cap
    } else {
        method = "sa";
        const Schedule schedule = sampler.make_schedule(compiled.model);
        const SampleSet samples = anneal(compiled.model, schedule, sampler.reads, global.seed);
        best_state = samples.best().state;
    }

    const Matching matching = decode_matching(best_state, compiled, graph);
    const double cost = matching.cost_d();
    const double distance = cost <= 0 ? 0.0 : std::pow(cost, 1.0 / global.p);

    if (global.json) {
        std::cout << summary_json(cost, distance, n_vars, method,
                                  matching.constraint_violations)
                             .dump()
                  << "\n";
    } else if (!global.quiet) {
        std::cout << "cost ((d_p)^p): " << double_string(cost) << "\n"
                  << "distance (d_p): " << double_string(distance) << "\n"
                  << "method: " << method << "\n"
                  << "variables: " << n_vars << "\n"
                  << "constraint_violations: " << matching.constraint_violations << "\n";
        if (!exact) std::cout << "seed: " << global.seed << "\n";
    }

    if (check_oracle) {
        const OracleResult oracle = hungarian_distance(X, Y, global.p, q);
        const double gap = std::fabs(oracle.cost - cost);
        if (gap > 1e-9) {
            std::cerr << "oracle mismatch: qubo cost " << double_string(cost)
                      << " vs oracle cost " << double_string(oracle.cost) << "\n";
            return kExitDomain;
        }
        if (!global.quiet && !global.json) {
            std::cout << "oracle check: ok (|delta| = " << double_string(gap) << ")\n";
        }
    }
    return kExitOk;
}

int run_oracle(const GlobalOptions& global, const std::string& x_path,
               const std::string& y_path, const std::string& method) {
    const PersistenceDiagram X = load_diagram(x_path);
    const PersistenceDiagram Y = load_diagram(y_path);
    const double q = global.q();
    const OracleResult result = (method == "brute")
                                        ? brute_force_distance(X, Y, global.p, q)
                                        : hungarian_distance(X, Y, global.p, q);

    if (global.json) {
        std::cout << summary_json(result.cost, result.distance,
                                  X.size() * Y.size() + X.size() + Y.size(), method, 0)
                             .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "cost: " << double_string(result.cost) << "\n"
              << "distance: " << double_string(result.distance) << "\n";
    const AugmentedSides sides = augment(X, Y);
    for (std::size_t i = 0; i < result.matching.size(); ++i) {
        std::cout << side_node_id(sides.x_bar[i]) << " -> "
                  << side_node_id(sides.y_bar[result.matching[i]]) << "\n";
    }
    return kExitOk;
}

int run_solve(const GlobalOptions& global, const SamplerOptions& sampler,
              const std::string& qubo_path, const std::string& out_path,
              const std::string& histogram_path) {
    const QuboModel model = load_qubo(qubo_path);
    const Schedule schedule = sampler.make_schedule(model);

    SampleSet samples;
    if (schedule.kind == Schedule::Kind::kReverse) {
        const Assignment initial = parse_bits(sampler.initial_bits, model.num_vars());
        samples = reverse_anneal(model, initial, schedule, sampler.reads, global.seed);
    } else {
        samples = anneal(model, schedule, sampler.reads, global.seed);
    }

    emit(out_path, samples_jsonl(samples));
    if (!histogram_path.empty()) {
        write_file_atomic(histogram_path, histogram_csv(samples));
    }
    if (!global.quiet && !out_path.empty() && out_path != "-") {
        std::cout << "best energy: " << double_string(samples.best().energy) << "\n"
                  << "seed: " << global.seed << "\n";
    }
    return kExitOk;
}

int run_gen_chimera(std::size_t rows, std::size_t cols, std::size_t shore,
                    const std::string& out_path) {
    const HardwareGraph graph = chimera(rows, cols, shore);
    std::ostringstream out;
    for (const auto& [u, v] : graph.edges) {
        out << u << " " << v << "\n";
    }
    emit(out_path, out.str());
    return kExitOk;
}

int run_embed(const GlobalOptions& global, const std::string& qubo_path, std::size_t rows,
              std::size_t cols, std::size_t shore, int retries, const std::string& out_path,
              const std::string& embedded_path) {
    const QuboModel model = load_qubo(qubo_path);
    const LogicalGraph logical = logical_graph(model);
    const HardwareGraph hardware = chimera(rows, cols, shore);

    EmbedOptions options;
    options.retries = retries;
    const EmbedResult result = find_embedding(logical, hardware, global.seed, options);
    if (!result.success()) {
        std::cerr << "no embedding found after " << result.attempts
                  << " attempts (the graph may still be embeddable)\n";
        return kExitNoEmbed;
    }
    const Embedding& embedding = *result.embedding;

    ordered_json chains_json;
    for (std::size_t u = 0; u < embedding.chains.size(); ++u) {
        chains_json[std::to_string(u)] = embedding.chains[u];
    }
    emit(out_path, chains_json.dump() + "\n");

    const ChainStats stats = chain_stats(embedding);
    if (!global.quiet) {
        std::cout << "chains: " << embedding.num_chains() << " max_chain: " << stats.max_len
                  << " mean_chain: " << double_string(stats.mean_len)
                  << " total_qubits: " << stats.total_qubits
                  << " attempts: " << result.attempts << " seed: " << global.seed << "\n";
    }

    if (!embedded_path.empty()) {
        write_file_atomic(embedded_path, write_qubo_text(embed_qubo(model, embedding, hardware)));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistence-diagram Wasserstein distances as QUBOs: compile, solve, "
                 "verify, and embed"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--p", global.p, "Matching exponent p >= 1");
    app.add_option("--q", global.q_text, "Ground-norm exponent q >= 1, or 'inf'");
    app.add_option("--gamma", global.gamma_text, "Penalty weight (decimal); default derives "
                                                 "from the edge weights");
    app.add_option("--seed", global.seed, "Master RNG seed");
    app.add_flag("--quiet", global.quiet, "Suppress informational output");
    app.add_flag("--json", global.json, "Print a machine-readable summary");

    // pd2qubo
    auto* pd2qubo_cmd = app.add_subcommand("pd2qubo", "Compile two diagrams into a QUBO "
                                                      "and a variable map");
    std::string x_path, y_path, out_prefix = "wasserstein";
    pd2qubo_cmd->add_option("X", x_path, "First diagram CSV")->required();
    pd2qubo_cmd->add_option("Y", y_path, "Second diagram CSV")->required();
    pd2qubo_cmd->add_option("--out", out_prefix, "Output prefix (<out>.qubo, <out>.map)");

    // wasserstein
    auto* wass_cmd = app.add_subcommand("wasserstein", "End-to-end distance: compile, "
                                                       "solve, decode");
    std::string wx_path, wy_path;
    bool force_exact = false, force_sa = false, check_oracle = false;
    SamplerOptions wass_sampler;
    wass_cmd->add_option("X", wx_path, "First diagram CSV")->required();
    wass_cmd->add_option("Y", wy_path, "Second diagram CSV")->required();
    wass_cmd->add_flag("--exact", force_exact, "Force exhaustive enumeration");
    wass_cmd->add_flag("--sa", force_sa, "Force the annealing path");
    wass_cmd->add_flag("--check-oracle", check_oracle, "Cross-validate against the "
                                                       "Hungarian oracle");
    wass_sampler.add_flags(wass_cmd);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact distance via brute force or "
                                                    "the Hungarian algorithm");
    std::string ox_path, oy_path, oracle_method = "hungarian";
    oracle_cmd->add_option("X", ox_path, "First diagram CSV")->required();
    oracle_cmd->add_option("Y", oy_path, "Second diagram CSV")->required();
    oracle_cmd->add_option("--method", oracle_method, "brute or hungarian")
            ->check(CLI::IsMember({"brute", "hungarian"}));

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Sample a QUBO file with an annealing "
                                                  "emulator");
    std::string qubo_path, solve_out, solve_histogram;
    SamplerOptions solve_sampler;
    solve_cmd->add_option("QUBO", qubo_path, "QUBO text file")->required();
    solve_cmd->add_option("--out", solve_out, "Write sample JSON-lines here (default: stdout)");
    solve_cmd->add_option("--histogram", solve_histogram, "Write an energy,occurrences CSV");
    solve_sampler.add_flags(solve_cmd);

    // gen-chimera
    auto* chimera_cmd = app.add_subcommand("gen-chimera", "Emit a Chimera hardware edge "
                                                          "list");
    std::size_t rows = 1, cols = 1, shore = 4;
    std::string chimera_out;
    chimera_cmd->add_option("--rows", rows, "Grid rows M")->required();
    chimera_cmd->add_option("--cols", cols, "Grid cols N")->required();
    chimera_cmd->add_option("--shore", shore, "Shore size L")->required();
    chimera_cmd->add_option("--out", chimera_out, "Output file (default: stdout)");

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "Minor-embed a QUBO onto a Chimera "
                                                  "graph");
    std::string embed_qubo_path, embed_out, embedded_qubo_out;
    std::size_t embed_rows = 1, embed_cols = 1, embed_shore = 4;
    int embed_retries = 10;
    embed_cmd->add_option("--qubo", embed_qubo_path, "QUBO text file")->required();
    embed_cmd->add_option("--rows", embed_rows, "Grid rows M")->required();
    embed_cmd->add_option("--cols", embed_cols, "Grid cols N")->required();
    embed_cmd->add_option("--shore", embed_shore, "Shore size L")->required();
    embed_cmd->add_option("--retries", embed_retries, "Embedding attempts before failure");
    embed_cmd->add_option("--out", embed_out, "Embedding JSON file (default: stdout)");
    embed_cmd->add_option("--emit-embedded-qubo", embedded_qubo_out,
                          "Write the chain-expanded hardware QUBO here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pd2qubo_cmd->parsed()) {
            return run_pd2qubo(global, x_path, y_path, out_prefix);
        }
        if (wass_cmd->parsed()) {
            return run_wasserstein(global, wass_sampler, wx_path, wy_path, force_exact,
                                   force_sa, check_oracle);
        }
        if (oracle_cmd->parsed()) {
            return run_oracle(global, ox_path, oy_path, oracle_method);
        }
        if (solve_cmd->parsed()) {
            return run_solve(global, solve_sampler, qubo_path, solve_out, solve_histogram);
        }
        if (chimera_cmd->parsed()) {
            return run_gen_chimera(rows, cols, shore, chimera_out);
        }
        if (embed_cmd->parsed()) {
            return run_embed(global, embed_qubo_path, embed_rows, embed_cols, embed_shore,
                             embed_retries, embed_out, embedded_qubo_out);
        }
    } catch (const SizeError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitSize;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
