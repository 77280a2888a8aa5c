#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace girth5 {

using Vertex = std::uint32_t;

/// Largest order any Graph may have.
inline constexpr std::size_t kMaxOrder = 4096;

/// Girth threshold used by every girth-safe edit unless a caller overrides it.
inline constexpr unsigned kDefaultGirth = 5;

/// Unordered vertex pair stored with u < v.
struct VertexPair {
    Vertex u = 0;
    Vertex v = 0;

    /// Normalizes the order; throws UsageError when a == b.
    static VertexPair of(Vertex a, Vertex b);

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted. A row-major adjacency bitset mirrors the
/// lists so that neighborhood intersections cost O(n/64).
///
/// `connect`/`disconnect` are the raw simple-graph edits and do not look at
/// cycles; the girth-safe surface is `add_edge`/`remove_edge` below.
class Graph {
   public:
    explicit Graph(std::size_t order = 0);

    static Graph from_edges(std::size_t order, std::span<const VertexPair> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edge_count_; }
    std::size_t degree(Vertex v) const { return adj_[check(v)].size(); }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[check(v)]; }

    bool has_edge(Vertex u, Vertex v) const {
        check(v);
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    /// Adjacency row of v as order()-bit bitset, `words()` 64-bit words long.
    std::span<const std::uint64_t> row(Vertex v) const {
        return {bits_.data() + std::size_t{check(v)} * words_, words_};
    }
    std::size_t words() const noexcept { return words_; }

    void connect(Vertex u, Vertex v);
    void disconnect(Vertex u, Vertex v);

    /// All edges in ascending normalized order.
    std::vector<VertexPair> edges() const;
    std::vector<std::size_t> degrees() const;

    /// Returns v; throws UsageError when v >= order().
    Vertex check(Vertex v) const {
        if (v >= n_) [[unlikely]]
            out_of_range(v);
        return v;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

   private:
    [[noreturn]] void out_of_range(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> bits_;
};

using Bitset = std::vector<std::uint64_t>;

inline bool test_bit(std::span<const std::uint64_t> bits, std::size_t i) {
    return (bits[i >> 6] >> (i & 63)) & 1u;
}
inline void set_bit(std::span<std::uint64_t> bits, std::size_t i) {
    bits[i >> 6] |= std::uint64_t{1} << (i & 63);
}

/// Sets `out` to the vertices at distance <= radius from x.
void ball(const Graph& g, Vertex x, unsigned radius, Bitset& out);

/// True iff some u-v path has length <= d. Truncated BFS over neighbor lists.
bool distance_at_most(const Graph& g, Vertex u, Vertex v, unsigned d);

/// True iff u != v, {u,v} is a non-edge, and dist(u,v) >= girth - 1, so
/// that inserting the edge cannot close a cycle shorter than `girth`.
bool is_legal_edge(const Graph& g, Vertex u, Vertex v, unsigned girth = kDefaultGirth);

/// Every legal pair, ascending.
std::vector<VertexPair> enumerate_legal_edges(const Graph& g, unsigned girth = kDefaultGirth);

/// The legal pairs maximizing deg(u) + deg(v), ascending. Throws
/// EmptyDomainError if the graph has no legal pair.
std::vector<VertexPair> max_degree_sum_legal_edges(const Graph& g,
                                                   unsigned girth = kDefaultGirth);

/// Girth-safe insertion; throws ContractViolation on an illegal or present pair.
void add_edge(Graph& g, VertexPair p, unsigned girth = kDefaultGirth);
/// Throws ContractViolation when p is not an edge.
void remove_edge(Graph& g, VertexPair p);

/// Length of the shortest cycle, or nullopt for a forest.
std::optional<unsigned> girth(const Graph& g);

/// True iff g has no cycle shorter than `threshold`.
bool girth_at_least(const Graph& g, unsigned threshold);

Graph add_isolated_vertex(const Graph& g);
/// Removes v and shifts every id above v down by one.
Graph delete_vertex(const Graph& g, Vertex v);

namespace reference {

/// Pairwise is_legal_edge sweep via distance_at_most. Slow; kept as the
/// oracle the bitset enumeration is tested against.
std::vector<VertexPair> enumerate_legal_edges(const Graph& g, unsigned girth = kDefaultGirth);

}  // namespace reference

}  // namespace girth5
