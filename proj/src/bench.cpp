#include "ms2/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>

#include "ms2/pkms2.hpp"

namespace ms2 {

namespace {

constexpr int kMaxStructureRestarts = 1000000;
constexpr int kMaxSequenceTries = 1000;

/// splitmix64 output function.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent stream seed for (length index, sequence index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1);
    z = mix64(z);
    z += 0x9e3779b97f4a7c15ULL * (b + 1);
    return mix64(z);
}

/// Unbiased draw from {0, ..., m-1} by rejection.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t m) {
    const std::uint64_t threshold = (0 - m) % m;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold)
            return x % m;
    }
}

MethodResult run_method(const std::string &method, const SecondaryStructure &s,
                        const SecondaryStructure &t,
                        const MethodOptions &opts) {
    if (method == "exact")
        return ms2_exact(s, t, opts);
    if (method == "near")
        return ms2_near_optimal(s, t, opts);
    if (method == "greedy")
        return ms2_greedy(s, t, opts);
    if (method == "bnb")
        return ms2_branch_bound(s, t, opts);
    if (method == "pk")
        return pk_ms2(s, t);
    throw ValidationError("unknown method: " + method);
}

MethodOutcome measure(const std::string &method, const SecondaryStructure &s,
                      const SecondaryStructure &t,
                      const BenchmarkConfig &config) {
    MethodOutcome out;
    out.method = method;
    MethodOptions opts;
    opts.max_cycles = config.max_cycles;
    opts.node_budget = config.node_budget;
    const auto start = std::chrono::steady_clock::now();
    try {
        const MethodResult res = run_method(method, s, t, opts);
        out.distance = res.trajectory.length();
        out.removals = res.trajectory.removals;
        out.additions = res.trajectory.additions;
        out.shifts = res.trajectory.shifts;
        out.nodes = res.stats.nodes;
        out.edges = res.stats.edges;
        out.cycles = res.stats.cycles;
        out.micros_cycles = res.stats.micros_cycles;
        out.micros_ip = res.stats.micros_ip;
        out.micros_topo = res.stats.micros_topo;
    } catch (const CycleLimitError &) {
        out.truncated = true;
    } catch (const SearchBudgetError &) {
        out.truncated = true;
    }
    out.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return out;
}

void validate_config(const BenchmarkConfig &config) {
    if (config.length_step <= 0)
        throw ValidationError("length step must be positive");
    if (config.length_start < 1)
        throw ValidationError("length start must be at least 1");
    if (config.seqs_per_length < 1)
        throw ValidationError("need at least one sequence per length");
    if (config.structs_per_seq < 1)
        throw ValidationError("need at least one structure per sequence");
    if (config.workers < 1)
        throw ValidationError("need at least one worker");
    if (config.methods.empty())
        throw ValidationError("no methods requested");
    for (const std::string &m : config.methods)
        if (m != "exact" && m != "near" && m != "greedy" && m != "bnb" &&
            m != "pk")
            throw ValidationError("unknown method: " + m);
}

struct Instance {
    std::int64_t id = 0;
    int n = 0;
    SecondaryStructure s, t;
};

std::vector<Instance> generate_instances(const BenchmarkConfig &config) {
    std::vector<Instance> instances;
    std::int64_t next_id = 0;
    int length_index = 0;
    for (int n = config.length_start; n <= config.length_stop;
         n += config.length_step, ++length_index) {
        const int pairs =
            config.pairs_per_struct < 0 ? n / 5 : config.pairs_per_struct;
        if (pairs > n / 2)
            throw ValidationError("cannot place " + std::to_string(pairs) +
                                  " disjoint pairs on " + std::to_string(n) +
                                  " positions");
        for (int si = 0; si < config.seqs_per_length; ++si) {
            std::mt19937_64 rng(derive_seed(config.seed, length_index, si));
            std::vector<SecondaryStructure> structs;
            bool ok = false;
            for (int tries = 0; tries < kMaxSequenceTries && !ok; ++tries) {
                const std::string seq = gen_random_sequence(n, rng);
                structs.clear();
                try {
                    for (int k = 0; k < config.structs_per_seq; ++k)
                        structs.push_back(gen_random_structure(
                            seq, pairs, config.theta, rng));
                    ok = true;
                } catch (const ValidationError &) {
                    // This sequence cannot host the requested pairs
                    // (or sampling kept dead-ending); draw a fresh one.
                }
            }
            if (!ok)
                throw ValidationError(
                    "no sampled sequence of length " + std::to_string(n) +
                    " supports " + std::to_string(pairs) + " pairs");
            for (int a = 0; a < config.structs_per_seq; ++a)
                for (int b = a + 1; b < config.structs_per_seq; ++b)
                    instances.push_back(
                        {next_id++, n, structs[a], structs[b]});
        }
    }
    return instances;
}

} // namespace

std::string gen_random_sequence(int n, std::mt19937_64 &rng) {
    if (n < 1)
        throw ValidationError("sequence length must be at least 1");
    static constexpr char kBases[4] = {'A', 'C', 'G', 'U'};
    std::string seq(static_cast<size_t>(n), 'A');
    for (char &c : seq)
        c = kBases[uniform_below(rng, 4)];
    return seq;
}

SecondaryStructure gen_random_structure(const std::string &seq, int num_pairs,
                                        int theta, std::mt19937_64 &rng) {
    const int n = static_cast<int>(seq.size());
    if (n < 1)
        throw ValidationError("sequence must not be empty");
    if (num_pairs < 0)
        throw ValidationError("pair count must be nonnegative");
    StructureOptions opts;
    opts.min_hairpin = theta;
    if (num_pairs == 0)
        return SecondaryStructure(n, {}, opts);
    if (num_pairs > n / 2)
        throw ValidationError("cannot place " + std::to_string(num_pairs) +
                              " disjoint pairs on " + std::to_string(n) +
                              " positions");

    std::vector<BasePair> all;
    for (Pos i = 1; i <= n; ++i)
        for (Pos j = i + theta + 1; j <= n; ++j)
            if (is_canonical_pair(seq[static_cast<size_t>(i - 1)],
                                  seq[static_cast<size_t>(j - 1)]))
                all.push_back({i, j});
    if (all.empty())
        throw ValidationError("sequence admits no canonical pair spanning "
                              "more than " +
                              std::to_string(theta) + " positions");

    std::vector<BasePair> live, picked;
    for (int attempt = 0; attempt < kMaxStructureRestarts; ++attempt) {
        live = all;
        picked.clear();
        while (static_cast<int>(picked.size()) < num_pairs && !live.empty()) {
            const BasePair p =
                live[uniform_below(rng, live.size())];
            picked.push_back(p);
            std::erase_if(live, [&p](const BasePair &q) {
                return q.i == p.i || q.i == p.j || q.j == p.i || q.j == p.j ||
                       crosses(p, q);
            });
        }
        if (static_cast<int>(picked.size()) == num_pairs) {
            std::sort(picked.begin(), picked.end());
            return SecondaryStructure(n, std::move(picked), opts);
        }
    }
    throw ValidationError("structure sampling kept exhausting the admissible "
                          "pairs before reaching " +
                          std::to_string(num_pairs));
}

std::vector<BenchmarkRecord> run_benchmark(const BenchmarkConfig &config) {
    validate_config(config);
    const std::vector<Instance> instances = generate_instances(config);

    std::vector<BenchmarkRecord> records(instances.size());
    auto measure_instance = [&](size_t k) {
        const Instance &inst = instances[k];
        BenchmarkRecord rec;
        rec.id = inst.id;
        rec.n = inst.n;
        for (const std::string &m : config.methods)
            rec.outcomes.push_back(measure(m, inst.s, inst.t, config));
        records[k] = std::move(rec);
    };

    const int workers = std::min<int>(
        config.workers, std::max<size_t>(instances.size(), 1));
    if (workers <= 1) {
        for (size_t k = 0; k < instances.size(); ++k)
            measure_instance(k);
        return records;
    }

    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= instances.size() || failed.load())
                return;
            try {
                measure_instance(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (std::thread &th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
    return records;
}

void write_benchmark_csv(std::ostream &out,
                         const std::vector<BenchmarkRecord> &records,
                         bool include_timing) {
    out << "id,n,method,distance,removals,additions,shifts,nodes,edges,"
           "cycles,truncated,micros\n";
    for (const BenchmarkRecord &rec : records)
        for (const MethodOutcome &o : rec.outcomes)
            out << rec.id << ',' << rec.n << ',' << o.method << ','
                << o.distance << ',' << o.removals << ',' << o.additions
                << ',' << o.shifts << ',' << o.nodes << ',' << o.edges << ','
                << o.cycles << ',' << (o.truncated ? 1 : 0) << ','
                << (include_timing ? o.micros : 0) << '\n';
}

void write_phase_csv(std::ostream &out,
                     const std::vector<BenchmarkRecord> &records) {
    out << "id,n,method,micros_cycles,micros_ip,micros_topo\n";
    for (const BenchmarkRecord &rec : records)
        for (const MethodOutcome &o : rec.outcomes)
            if (o.method == "exact")
                out << rec.id << ',' << rec.n << ',' << o.method << ','
                    << o.micros_cycles << ',' << o.micros_ip << ','
                    << o.micros_topo << '\n';
}

} // namespace ms2
