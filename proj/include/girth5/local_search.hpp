#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "girth5/graph.hpp"

namespace girth5 {

struct SearchParams {
    std::uint64_t total_num_iters = 1;
    /// Edges deleted within this many iterations are not deleted again.
    std::uint64_t num_iters_too_recent = 1;
    std::uint32_t k_max = 1;
    /// Probability of taking a maximum degree-sum legal edge instead of a
    /// uniformly random one.
    double p = 0.5;
    std::uint64_t rng_seed = 0;
    unsigned girth = kDefaultGirth;

    /// Throws UsageError on a zero count, p outside [0,1] or girth < 3.
    void validate() const;
};

/// Iteration at which each vertex pair was most recently deleted.
class DeletionLedger {
   public:
    explicit DeletionLedger(std::size_t order);

    void record(VertexPair p, std::uint64_t iteration);
    std::optional<std::uint64_t> last_deleted(VertexPair p) const;
    /// Eligible unless deleted at some iteration `last` with
    /// current - last <= window.
    bool eligible(VertexPair p, std::uint64_t current, std::uint64_t window) const;

   private:
    std::size_t slot(VertexPair p) const {
        if (p.v >= n_ || p.u >= p.v) [[unlikely]]
            bad_pair(p);
        return std::size_t{p.v} * (p.v - 1) / 2 + p.u;
    }
    [[noreturn]] void bad_pair(VertexPair p) const;

    std::size_t n_;
    std::vector<std::int64_t> last_;
};

/// Graphs of strictly increasing size; graphs.front() is the seed.
struct SearchResult {
    std::vector<Graph> graphs;
    std::uint64_t iterations_run = 0;
    std::size_t best_size = 0;
};

enum class EditKind { add, remove };

/// Passed to an observer right before an edit is applied; `before` is the
/// working graph prior to the edit.
struct EditEvent {
    EditKind kind;
    VertexPair pair;
    const Graph& before;
    std::uint64_t iteration;
};

using EditObserver = std::function<void(const EditEvent&)>;

/// Current edges that are not ledger-blocked, ascending.
std::vector<VertexPair> eligible_deletions(const Graph& g, const DeletionLedger& ledger,
                                           std::uint64_t current_iter, std::uint64_t window);

/// Randomized fill-and-perturb hill climbing at fixed order.
///
/// Each outer iteration fills the graph with legal edges until it is
/// edge-maximal, records it when it beats every size seen so far, then
/// deletes between 1 and k_max random edges that were not deleted in the
/// last num_iters_too_recent iterations. The legal pair set is maintained
/// incrementally across edits.
///
/// An edgeless seed is allowed: the loop guard starts at max(1, |E(seed)|).
SearchResult local_search(const Graph& seed, const SearchParams& params,
                          const EditObserver& observer = {});

namespace reference {

/// Same contract and the same random draws as girth5::local_search, but the
/// legal pair set is recomputed from scratch after every edit. Both must
/// return identical results for identical inputs.
SearchResult local_search(const Graph& seed, const SearchParams& params,
                          const EditObserver& observer = {});

}  // namespace reference

}  // namespace girth5
