#ifndef MS2_BENCH_HPP
#define MS2_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "ms2/structures.hpp"
#include "ms2/trajectory.hpp"

namespace ms2 {

/// Batch configuration: for every length n in start..stop (step),
/// draw `seqs_per_length` random sequences, `structs_per_seq` random
/// structures on each sequence, and measure every unordered structure
/// pair with every requested method.
struct BenchmarkConfig {
    int length_start = 10;
    int length_stop = 10;
    int length_step = 10;
    int seqs_per_length = 1;
    int structs_per_seq = 2;
    /// Base pairs per structure; -1 means n/5 (so 40% of positions pair).
    int pairs_per_struct = -1;
    int theta = 3;
    std::uint64_t seed = 1;
    std::int64_t max_cycles = 50000000;
    std::int64_t node_budget = 10000000;
    /// Any of "exact", "near", "greedy", "bnb", "pk".
    std::vector<std::string> methods = {"exact"};
    /// Instance-level worker threads; results keep instance order.
    int workers = 1;
};

/// One method's measurements on one instance.  When the method hit
/// its cycle cap or search budget, truncated is set and every count
/// is -1; micros still holds the elapsed wall time.
struct MethodOutcome {
    std::string method;
    int distance = -1;
    int removals = -1;
    int additions = -1;
    int shifts = -1;
    int nodes = -1;
    int edges = -1;
    std::int64_t cycles = -1;
    bool truncated = false;
    std::int64_t micros = 0;
    std::int64_t micros_cycles = 0;
    std::int64_t micros_ip = 0;
    std::int64_t micros_topo = 0;
};

/// One structure pair with its per-method measurements.
struct BenchmarkRecord {
    std::int64_t id = 0;
    int n = 0;
    std::vector<MethodOutcome> outcomes;
};

/// Uniform random sequence over {A,C,G,U}.  Throws ValidationError
/// when n < 1.  Deterministic for a fixed generator state.
std::string gen_random_sequence(int n, std::mt19937_64 &rng);

/// Random structure with exactly num_pairs pairs: repeatedly pick a
/// pair uniformly from the list of still-admissible pairs (canonical
/// with seq, j - i > theta), discarding picks that touch or cross the
/// chosen one; when the list runs dry early, throw the partial result
/// away and start over.  Throws ValidationError when the request is
/// infeasible (num_pairs > n/2, no admissible pair at all) or when
/// the restart cap is exhausted.
SecondaryStructure gen_random_structure(const std::string &seq, int num_pairs,
                                        int theta, std::mt19937_64 &rng);

/// Run the whole batch.  Instances are generated in deterministic
/// order (length ascending, sequence index ascending, structure pair
/// (a,b) with a < b lexicographic) from per-sequence generators
/// seeded by (seed, length index, sequence index), so the records
/// do not depend on the worker count.
std::vector<BenchmarkRecord> run_benchmark(const BenchmarkConfig &config);

/// CSV with header id,n,method,distance,removals,additions,shifts,
/// nodes,edges,cycles,truncated,micros and one row per (record,
/// method).  The micros column is written as 0 unless include_timing
/// is set, keeping same-seed output byte-identical by default.
void write_benchmark_csv(std::ostream &out,
                         const std::vector<BenchmarkRecord> &records,
                         bool include_timing = false);

/// Per-phase timing rows (exact method only): id,n,method,
/// micros_cycles,micros_ip,micros_topo.
void write_phase_csv(std::ostream &out,
                     const std::vector<BenchmarkRecord> &records);

} // namespace ms2

#endif // MS2_BENCH_HPP
