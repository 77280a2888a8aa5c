#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "girth5/best_store.hpp"
#include "girth5/canon.hpp"
#include "girth5/local_search.hpp"
#include "girth5/report.hpp"

namespace girth5 {

/// Order-dependent local-search parameters:
///   total_num_iters      = iters_per_order * n
///   num_iters_too_recent = max(1, floor(n / window_divisor))
///   k_max                = max(k_max_floor, floor(n / k_max_divisor)), or
///                          k_max_floor when k_max_divisor is 0
struct ParamTemplate {
    std::uint64_t iters_per_order = 1000;
    std::uint64_t window_divisor = 1;
    std::uint32_t k_max_floor = 3;
    std::uint32_t k_max_divisor = 0;
    double p = 0.5;

    SearchParams at(std::size_t n, std::uint64_t rng_seed) const;
};

/// (1000n, n, 3, 0.5)
ParamTemplate first_run_template();
/// (1000n, floor(n/3), max(3, floor(n/10)), 0.5)
ParamTemplate second_run_template();

struct RunConfig {
    std::size_t n_low = 0;
    std::size_t n_high = 0;
    std::size_t ell = 150;
    std::size_t passes = 2;
    std::filesystem::path seed_dir;
    /// Snapshots and bounds.csv go here when set.
    std::optional<std::filesystem::path> out_dir;
    ParamTemplate params_a = first_run_template();
    ParamTemplate params_b = second_run_template();
    std::uint64_t master_seed = 0;
    std::size_t threads = 1;
    std::size_t store_capacity = kDefaultStoreCapacity;
    /// Stop before the configured pass count once a pass improves no order.
    bool early_stop = false;
    std::optional<PreviousBounds> previous;

    /// Throws UsageError unless n_low < n_high, ell >= 1 and threads >= 1.
    /// passes may be 0 (seeds only).
    void validate() const;
};

struct SearchTask {
    Graph seed;
    SearchParams params;
};

struct KeyedGraph {
    Graph graph;
    CanonicalForm key;
};

/// Results of one task, in local_search order, each with its canonical key.
using TaskOutput = std::vector<KeyedGraph>;

/// Runs every task on the calling thread. Kept as the reference the
/// parallel kernel is checked against.
std::vector<TaskOutput> run_tasks_serial(std::span<const SearchTask> tasks);

/// OpenMP version of run_tasks_serial; output is identical for any thread count.
std::vector<TaskOutput> run_tasks_parallel(std::span<const SearchTask> tasks, std::size_t threads);

std::vector<CanonicalForm> canonical_forms_serial(std::span<const Graph> graphs);
std::vector<CanonicalForm> canonical_forms_parallel(std::span<const Graph> graphs,
                                                    std::size_t threads);

enum class RunDirection { up, down };

/// Stream id of one local search inside a run. Depends only on where the
/// search sits in the run, never on scheduling.
std::uint64_t task_seed(std::uint64_t master_seed, std::size_t pass, RunDirection dir,
                        std::size_t order, std::size_t index, unsigned which);

using ProgressSink = std::function<void(const std::string&)>;

/// For n = n_low .. n_high-1: each of the top `ell` graphs of order n gets an
/// isolated vertex and two local searches; every result goes into order n+1.
void up_run(BestStore& store, const RunConfig& cfg, std::size_t pass,
            const ProgressSink& progress = {});

/// For n = n_high .. n_low+1: all single-vertex deletions of the top `ell`
/// graphs of order n, deduplicated, cut to the best `ell`; two local searches
/// each; every result goes into order n-1.
void down_run(BestStore& store, const RunConfig& cfg, std::size_t pass,
              const ProgressSink& progress = {});

/// Seeds a store from cfg.seed_dir and alternates up and down runs for
/// cfg.passes passes, snapshotting after every half-pass when cfg.out_dir is
/// set. `warnings` receives the seed loader's skip notices.
BoundsTable compute_lower_bounds(const RunConfig& cfg, const ProgressSink& progress = {},
                                 std::vector<std::string>* warnings = nullptr);

/// Same, starting from a store the caller already holds.
BoundsTable compute_lower_bounds(BestStore& store, const RunConfig& cfg,
                                 const ProgressSink& progress = {});

}  // namespace girth5
