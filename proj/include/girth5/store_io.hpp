#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "girth5/best_store.hpp"
#include "girth5/graph.hpp"

namespace girth5 {

/// Reads one graph per line. Blank lines are skipped; a leading `>>graph6<<`
/// is stripped and other `>>` lines are ignored. Undecodable lines raise a
/// ValidationError naming file and line.
std::vector<Graph> read_graph6_file(const std::filesystem::path& file);

/// Writes one graph6 line per graph, newline-terminated.
void write_graph6_file(const std::filesystem::path& file, const std::vector<Graph>& graphs);

struct SeedLoad {
    BestStore store;
    /// One line per graph skipped for lying outside the requested range.
    std::vector<std::string> warnings;
};

/// Builds a store from every `*.g6` file in `dir` (visited in file-name
/// order). Graphs whose order falls outside [n_low, n_high] are skipped with
/// a warning. If `dir` is absent or holds no `.g6` file, every order in the
/// range is seeded with its edgeless graph.
///
/// Throws ConfigError if `dir` exists but is not a readable directory, and
/// ValidationError (naming file and line) for bad lines or short cycles.
SeedLoad load_seed_store(const std::filesystem::path& dir, std::size_t n_low, std::size_t n_high,
                         std::size_t capacity = kDefaultStoreCapacity,
                         unsigned girth = kDefaultGirth);

/// Snapshot file name for one order, e.g. `best_n10_1up.g6`.
std::string snapshot_file_name(std::size_t order, const std::string& tag);

/// Writes `best_n{order}_{tag}.g6` for every non-empty order, listing
/// canonical keys in rank order. Identical store contents give identical
/// bytes.
void save_store_snapshot(const BestStore& store, const std::filesystem::path& dir,
                         const std::string& tag);

/// Writes `content` to `file` through a temporary sibling and a rename.
void write_text_file(const std::filesystem::path& file, const std::string& content);

}  // namespace girth5
