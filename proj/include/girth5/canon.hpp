#pragma once

#include <compare>
#include <string>
#include <vector>

#include "girth5/graph.hpp"

namespace girth5 {

/// Isomorphism-class key: the graph6 string of the canonically relabeled
/// graph. Equal keys <=> isomorphic graphs.
struct CanonicalForm {
    std::string key;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical relabeling: element i is the vertex that receives label i.
///
/// Degree-colored equitable refinement followed by a depth-first search over
/// target-cell individualizations. The leaf with the lexicographically
/// smallest upper-triangle adjacency string wins. Automorphisms discovered
/// at leaves prune sibling subtrees (orbit pruning plus back-jumping to the
/// divergence level).
std::vector<Vertex> canonical_labeling(const Graph& g);

Graph relabel(const Graph& g, const std::vector<Vertex>& order);

CanonicalForm canonical_form(const Graph& g);

/// Exact isomorphism test by joint color refinement and backtracking over
/// color-compatible vertex matches. Shares no code with canonical_form.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace girth5
