#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "girth5/canon.hpp"
#include "girth5/graph.hpp"

namespace girth5 {

inline constexpr std::size_t kDefaultStoreCapacity = 500;

struct StoreEntry {
    CanonicalForm key;
    Graph graph;
};

/// Per-order collections of pairwise non-isomorphic girth-safe graphs.
///
/// Each order keeps its entries ranked by size descending, ties by canonical
/// key ascending. When an order overflows its capacity the last-ranked
/// entry is evicted.
class BestStore {
   public:
    explicit BestStore(std::size_t capacity = kDefaultStoreCapacity, unsigned girth = kDefaultGirth);

    /// False if an isomorphic graph is already stored at this order, or if
    /// the new entry ranks last in a full order and is evicted at once.
    bool insert(const Graph& g);
    /// Same, with a key the caller already computed (e.g. on a worker thread).
    bool insert(Graph g, CanonicalForm key);

    /// Up to `ell` graphs of order n, best-ranked first.
    std::vector<Graph> top_ell(std::size_t n, std::size_t ell) const;

    const std::vector<StoreEntry>& entries(std::size_t n) const;
    std::optional<std::size_t> best_size(std::size_t n) const;
    std::vector<std::size_t> orders() const;
    bool contains(std::size_t n, const CanonicalForm& key) const;
    std::size_t count(std::size_t n) const;
    std::size_t capacity() const { return capacity_; }
    bool empty() const { return by_order_.empty(); }

   private:
    struct Bucket {
        std::vector<StoreEntry> ranked;
        std::unordered_set<std::string> keys;
    };

    std::size_t capacity_;
    unsigned girth_;
    std::map<std::size_t, Bucket> by_order_;
};

/// Ranking used by the store and by the down run's candidate cut.
bool ranks_before(std::size_t size_a, const CanonicalForm& a, std::size_t size_b,
                  const CanonicalForm& b);

}  // namespace girth5
