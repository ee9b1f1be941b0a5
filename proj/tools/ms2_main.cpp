#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ms2/bench.hpp"
#include "ms2/conflict_graph.hpp"
#include "ms2/optimize.hpp"
#include "ms2/partition.hpp"
#include "ms2/pkms2.hpp"
#include "ms2/structures.hpp"
#include "ms2/trajectory.hpp"

namespace {

/// A problem instance file: an optional '>' comment line, the
/// sequence (or '-' to skip the canonical-pair check), and the two
/// dot-bracket structures.  Blank lines are ignored.
struct ProblemInput {
    std::string seq;
    ms2::SecondaryStructure s, t;
};

ProblemInput read_input(const std::string &path, int theta) {
    std::ifstream in(path);
    if (!in)
        throw ms2::ValidationError("cannot open input file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (lines.empty() && line[0] == '>')
            continue;
        lines.push_back(line);
    }
    if (lines.size() != 3)
        throw ms2::ValidationError(
            "input must hold a sequence line ('-' to skip the canonical "
            "check) followed by two dot-bracket lines");

    ProblemInput input;
    input.seq = lines[0];
    ms2::StructureOptions opts;
    opts.min_hairpin = theta;
    opts.allow_pseudoknots = true;
    input.s = ms2::parse_dot_bracket(lines[1], opts);
    input.t = ms2::parse_dot_bracket(lines[2], opts);
    if (input.s.length() != input.t.length())
        throw ms2::ValidationError("the two structures differ in length");
    if (input.seq != "-") {
        if (static_cast<int>(input.seq.size()) != input.s.length())
            throw ms2::ValidationError(
                "sequence length does not match the structures");
        ms2::check_canonical(input.s, input.seq);
        ms2::check_canonical(input.t, input.seq);
    }
    return input;
}

struct DistArgs {
    std::string input;
    std::string method;
    int theta = 3;
    int locality_d = -1;
    std::int64_t max_cycles = 50000000;
    std::string format = "text";
};

nlohmann::json moves_to_json(const ms2::Trajectory &traj) {
    nlohmann::json moves = nlohmann::json::array();
    for (const ms2::Move &m : traj.moves) {
        switch (m.kind) {
        case ms2::Move::Kind::Remove:
            moves.push_back(
                {{"kind", "remove"}, {"pair", {m.from.i, m.from.j}}});
            break;
        case ms2::Move::Kind::Add:
            moves.push_back({{"kind", "add"}, {"pair", {m.to.i, m.to.j}}});
            break;
        case ms2::Move::Kind::Shift:
            moves.push_back({{"kind", "shift"},
                             {"from", {m.from.i, m.from.j}},
                             {"to", {m.to.i, m.to.j}}});
            break;
        }
    }
    return moves;
}

int cmd_dist(const DistArgs &args) {
    const ProblemInput input = read_input(args.input, args.theta);
    if (args.method != "pk" &&
        (input.s.has_crossing() || input.t.has_crossing()))
        throw ms2::ValidationError("method '" + args.method +
                                   "' requires pseudoknot-free structures");
    if (args.locality_d >= 0 && args.method != "exact")
        throw ms2::ValidationError(
            "--locality-d applies to --method exact only");

    ms2::MethodOptions opts;
    opts.max_cycles = args.max_cycles;
    opts.locality_d = args.locality_d;
    ms2::MethodResult res;
    if (args.method == "exact")
        res = ms2::ms2_exact(input.s, input.t, opts);
    else if (args.method == "near")
        res = ms2::ms2_near_optimal(input.s, input.t, opts);
    else if (args.method == "greedy")
        res = ms2::ms2_greedy(input.s, input.t, opts);
    else if (args.method == "bnb")
        res = ms2::ms2_branch_bound(input.s, input.t, opts);
    else
        res = ms2::pk_ms2(input.s, input.t);

    const std::string label =
        args.method == "pk" ? "pk-MS2 Distance" : "MS2 Distance";
    if (args.format == "json") {
        nlohmann::json j{
            {"method", args.method},
            {"n", input.s.length()},
            {"distance", res.trajectory.length()},
            {"removals", res.trajectory.removals},
            {"additions", res.trajectory.additions},
            {"shifts", res.trajectory.shifts},
            {"moves", moves_to_json(res.trajectory)},
            {"stats",
             {{"nodes", res.stats.nodes},
              {"edges", res.stats.edges},
              {"cycles", res.stats.cycles},
              {"truncated", res.stats.truncated}}},
        };
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << ms2::format_trajectory_text(input.s, res.trajectory,
                                                 label);
    }
    return 0;
}

struct GraphArgs {
    std::string input;
    std::string emit = "summary";
    bool coarse = false;
    bool include_exclusions = false;
    int theta = 3;
    std::int64_t max_cycles = 50000000;
};

std::string format_class_line(int index, const ms2::EquivalenceClass &cls) {
    std::ostringstream out;
    out << "X" << index << " = {";
    for (size_t k = 0; k < cls.members.size(); ++k) {
        if (k > 0)
            out << ", ";
        out << cls.members[k];
    }
    out << "} of type " << static_cast<int>(cls.type);
    return out.str();
}

int cmd_graph(const GraphArgs &args) {
    const ProblemInput input = read_input(args.input, args.theta);
    const ms2::PositionPartition part =
        ms2::partition_positions(input.s, input.t);
    std::vector<ms2::Pos> universe = part.A;
    universe.insert(universe.end(), part.B0.begin(), part.B0.end());
    std::sort(universe.begin(), universe.end());
    const std::vector<ms2::EquivalenceClass> classes =
        ms2::equivalence_classes(input.s, input.t, universe);

    if (args.coarse) {
        const ms2::CoarseDigraph graph =
            ms2::build_coarse_digraph(input.s, input.t, classes);
        if (args.emit == "dot") {
            std::cout << ms2::to_dot(graph, classes);
            return 0;
        }
        std::vector<std::pair<int, int>> edges;
        for (const ms2::CoarseArc &arc : graph.arcs)
            edges.emplace_back(arc.from, arc.to);
        const ms2::CycleSet cycles = ms2::enumerate_simple_cycles(
            graph.num_classes, edges, args.max_cycles);
        if (cycles.truncated)
            throw ms2::CycleLimitError(
                "cycle enumeration exceeded the cap of " +
                std::to_string(args.max_cycles));
        std::cout << "Number of Nodes: " << graph.num_classes << '\n'
                  << "Number of edges: " << graph.arcs.size() << '\n'
                  << "Number of cycles: " << cycles.count() << '\n';
    } else {
        const ms2::ConflictDigraph graph =
            ms2::build_conflict_digraph(input.s, input.t);
        if (args.emit == "dot") {
            std::cout << ms2::to_dot(graph);
            return 0;
        }
        // The digraph's edges order compatible shifts; each exclusion
        // pair is two mutually incompatible shifts.  Counting the
        // latter as a pair of opposing edges reproduces the larger
        // edge/cycle numbers of the generalized conflict relation.
        std::vector<std::pair<int, int>> edges = graph.edges;
        if (args.include_exclusions) {
            for (const auto &[u, v] : graph.exclusion_pairs) {
                edges.emplace_back(u, v);
                edges.emplace_back(v, u);
            }
            std::sort(edges.begin(), edges.end());
        }
        const ms2::CycleSet cycles = ms2::enumerate_simple_cycles(
            graph.num_nodes(), edges, args.max_cycles);
        if (cycles.truncated)
            throw ms2::CycleLimitError(
                "cycle enumeration exceeded the cap of " +
                std::to_string(args.max_cycles));
        std::cout << "Number of Nodes: " << graph.num_nodes() << '\n'
                  << "Number of edges: " << edges.size() << '\n'
                  << "Number of cycles: " << cycles.count() << '\n'
                  << "Number of closed 2-cycles: " << graph.two_cycles.size()
                  << '\n';
    }
    for (size_t k = 0; k < classes.size(); ++k)
        std::cout << format_class_line(static_cast<int>(k) + 1, classes[k])
                  << '\n';
    return 0;
}

struct BenchArgs {
    std::string lengths;
    int seqs = 0;
    int structs = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string methods = "exact";
    int workers = 1;
    int pairs = -1;
    int theta = 3;
    std::int64_t max_cycles = 50000000;
    bool timing = false;
    std::string phase_csv;
};

void parse_lengths(const std::string &text, ms2::BenchmarkConfig &config) {
    const size_t c1 = text.find(':');
    const size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ms2::ValidationError("--lengths expects START:STOP:STEP");
    try {
        config.length_start = std::stoi(text.substr(0, c1));
        config.length_stop = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
        config.length_step = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception &) {
        throw ms2::ValidationError("--lengths expects START:STOP:STEP");
    }
}

std::vector<std::string> split_methods(const std::string &text) {
    std::vector<std::string> methods;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            methods.push_back(item);
    return methods;
}

int cmd_bench(const BenchArgs &args) {
    ms2::BenchmarkConfig config;
    parse_lengths(args.lengths, config);
    config.seqs_per_length = args.seqs;
    config.structs_per_seq = args.structs;
    config.pairs_per_struct = args.pairs;
    config.theta = args.theta;
    config.seed = args.seed;
    config.max_cycles = args.max_cycles;
    config.methods = split_methods(args.methods);
    config.workers = args.workers;

    const std::vector<ms2::BenchmarkRecord> records =
        ms2::run_benchmark(config);

    std::ofstream out(args.out);
    if (!out)
        throw ms2::ValidationError("cannot open output file: " + args.out);
    ms2::write_benchmark_csv(out, records, args.timing);
    if (!out)
        throw ms2::ValidationError("failed writing: " + args.out);

    if (!args.phase_csv.empty()) {
        std::ofstream phase(args.phase_csv);
        if (!phase)
            throw ms2::ValidationError("cannot open output file: " +
                                       args.phase_csv);
        ms2::write_phase_csv(phase, records);
    }

    std::int64_t rows = 0, truncated = 0;
    for (const ms2::BenchmarkRecord &rec : records)
        for (const ms2::MethodOutcome &o : rec.outcomes) {
            ++rows;
            if (o.truncated)
                ++truncated;
        }
    std::cout << "instances: " << records.size() << '\n'
              << "rows: " << rows << '\n'
              << "truncated: " << truncated << '\n'
              << "wrote: " << args.out << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Minimum-length MS2 refolding trajectories between RNA "
                 "secondary structures"};
    app.require_subcommand(1);

    DistArgs dist_args;
    CLI::App *dist = app.add_subcommand(
        "dist", "Compute a refolding trajectory between two structures");
    dist->add_option("--input", dist_args.input,
                     "Instance file: optional '>' header, sequence (or '-'), "
                     "two dot-bracket lines")
        ->required();
    dist->add_option("--method", dist_args.method,
                     "Trajectory algorithm")
        ->required()
        ->check(CLI::IsMember({"exact", "near", "greedy", "bnb", "pk"}));
    dist->add_option("--theta", dist_args.theta,
                     "Minimum unpaired span (pairs need j-i > theta)");
    dist->add_option("--locality-d", dist_args.locality_d,
                     "Maximum shift displacement (exact method only)");
    dist->add_option("--max-cycles", dist_args.max_cycles,
                     "Abort once the digraph holds more simple cycles");
    dist->add_option("--format", dist_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    GraphArgs graph_args;
    CLI::App *graph = app.add_subcommand(
        "graph", "Inspect the conflict digraph of an instance");
    graph->add_option("--input", graph_args.input, "Instance file")
        ->required();
    graph->add_option("--emit", graph_args.emit, "Output form")
        ->check(CLI::IsMember({"dot", "summary"}));
    graph->add_flag("--coarse", graph_args.coarse,
                    "Use the class-level digraph");
    graph->add_flag("--include-exclusions", graph_args.include_exclusions,
                    "Count each mutually-exclusive shift pair as two "
                    "opposing edges (the generalized conflict relation)");
    graph->add_option("--theta", graph_args.theta, "Minimum unpaired span");
    graph->add_option("--max-cycles", graph_args.max_cycles,
                      "Abort once the digraph holds more simple cycles");

    BenchArgs bench_args;
    CLI::App *bench = app.add_subcommand(
        "bench", "Random-instance batch measurement, written as CSV");
    bench->add_option("--lengths", bench_args.lengths,
                      "Length schedule START:STOP:STEP")
        ->required();
    bench->add_option("--seqs", bench_args.seqs, "Sequences per length")
        ->required();
    bench->add_option("--structs", bench_args.structs,
                      "Structures per sequence")
        ->required();
    bench->add_option("--seed", bench_args.seed, "Random seed")->required();
    bench->add_option("--out", bench_args.out, "CSV output path")->required();
    bench->add_option("--methods", bench_args.methods,
                      "Comma-separated methods (exact,near,greedy,bnb,pk)");
    bench->add_option("--workers", bench_args.workers,
                      "Concurrent instance workers");
    bench->add_option("--pairs", bench_args.pairs,
                      "Pairs per structure (-1 means n/5)");
    bench->add_option("--theta", bench_args.theta, "Minimum unpaired span");
    bench->add_option("--max-cycles", bench_args.max_cycles,
                      "Per-instance simple-cycle cap");
    bench->add_flag("--timing", bench_args.timing,
                    "Write measured wall time into the micros column "
                    "(off keeps same-seed runs byte-identical)");
    bench->add_option("--phase-csv", bench_args.phase_csv,
                      "Also write per-phase timings of the exact method");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dist->parsed())
            return cmd_dist(dist_args);
        if (graph->parsed())
            return cmd_graph(graph_args);
        return cmd_bench(bench_args);
    } catch (const ms2::CycleLimitError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ms2::SearchBudgetError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
