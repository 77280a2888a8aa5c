#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "girth5/canon.hpp"
#include "girth5/graph.hpp"

namespace girth5 {

enum class BoundKind {
    exact,
    /// The node budget ran out: `value` is witnessed but not proven maximal.
    lower,
};

struct BoundRecord {
    std::size_t n = 0;
    BoundKind kind = BoundKind::lower;
    std::size_t value = 0;
    std::optional<CanonicalForm> witness;
    std::optional<Graph> witness_graph;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

/// Maximum size of an n-vertex graph with no 3- or 4-cycle, by branch and
/// bound over vertex pairs. Solves every order 1..n in turn and uses the
/// previous answer to bound the next:
///   |E| <= floor(n * ex(n-1) / (n-2))   (each edge survives n-2 vertex deletions)
///   min degree >= t - ex(n-1)            for any extremal graph with >= t edges
///   n >= 1 + maxdeg * mindeg             (girth >= 5 neighborhoods are disjoint)
/// Vertex 0 is fixed as a maximum-degree vertex adjacent to 1..deg(0).
/// Supports n <= 64. `budget` bounds the total number of search nodes.
BoundRecord exact_max_size(std::size_t n, std::uint64_t budget = kDefaultOracleBudget);

/// Lower bound on the order of a k-regular graph of girth g.
/// Throws UsageError for k < 2, g < 3 or on 64-bit overflow.
std::uint64_t moore_bound(std::uint64_t k, std::uint64_t g);

struct WitnessVerdict {
    bool order_ok = false;
    bool size_ok = false;
    bool girth_ok = false;

    bool passed() const { return order_ok && size_ok && girth_ok; }
};

WitnessVerdict verify_witness(const Graph& g, std::size_t claimed_n, std::size_t claimed_size,
                              unsigned girth_threshold = kDefaultGirth);

struct DegreeSetReport {
    /// Distinct degrees, ascending.
    std::vector<std::size_t> degree_set;
    std::size_t order = 0;
    /// nullopt for a forest.
    std::optional<unsigned> girth;

    /// Exactly two degrees r < m and girth exactly 5.
    bool biregular_girth5() const;
};

DegreeSetReport degree_set_report(const Graph& g);

/// A ({r,m};5)-graph; its order bounds n({r,m};5) from above.
struct BiregularCandidate {
    std::size_t r = 0;
    std::size_t m = 0;
    std::size_t order = 0;
    std::size_t size = 0;
    CanonicalForm key;
};

/// Smallest-order candidate per degree set {r,m} among `graphs`, sorted by
/// (r, m). Ties on order keep the smaller canonical key.
std::vector<BiregularCandidate> biregular_candidates(std::span<const Graph> graphs);

}  // namespace girth5
