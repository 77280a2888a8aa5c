#include "girth5/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "girth5/errors.hpp"

namespace girth5 {

VertexPair VertexPair::of(Vertex a, Vertex b) {
    if (a == b) {
        throw UsageError("vertex pair needs two distinct vertices, got " + std::to_string(a) +
                         " twice");
    }
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

Graph::Graph(std::size_t order)
    : n_(order), words_((order + 63) / 64), adj_(order), bits_(order * words_, 0) {
    if (order > kMaxOrder) {
        throw CapacityError("graph order " + std::to_string(order) + " exceeds maximum " +
                            std::to_string(kMaxOrder));
    }
}

Graph Graph::from_edges(std::size_t order, std::span<const VertexPair> edges) {
    Graph g(order);
    for (const auto& e : edges) g.connect(e.u, e.v);
    return g;
}

void Graph::out_of_range(Vertex v) const {
    throw UsageError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n_));
}

void Graph::connect(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
        throw ContractViolation("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} already present");
    }
    auto& au = adj_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    bits_[std::size_t{u} * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[std::size_t{v} * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++edge_count_;
}

void Graph::disconnect(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v || !has_edge(u, v)) {
        throw ContractViolation("{" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not an edge");
    }
    auto& au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    bits_[std::size_t{u} * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[std::size_t{v} * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --edge_count_;
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : adj_[u]) {
            if (v > u) out.push_back({u, v});
        }
    }
    return out;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = adj_[v].size();
    return d;
}

void ball(const Graph& g, Vertex x, unsigned radius, Bitset& out) {
    const std::size_t w = g.words();
    out.assign(w, 0);
    set_bit(out, g.check(x));
    // frontiers as bitsets, grown by OR-ing adjacency rows; reused across
    // calls since ball sits on the local search hot path
    thread_local Bitset frontier;
    thread_local Bitset next;
    frontier.assign(w, 0);
    set_bit(frontier, x);
    next.resize(w);
    for (unsigned depth = 0; depth < radius; ++depth) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t wi = 0; wi < w; ++wi) {
            for (std::uint64_t bits = frontier[wi]; bits; bits &= bits - 1) {
                const auto y = static_cast<Vertex>(wi * 64 + std::countr_zero(bits));
                const auto row = g.row(y);
                for (std::size_t k = 0; k < w; ++k) next[k] |= row[k];
            }
        }
        bool grew = false;
        for (std::size_t k = 0; k < w; ++k) {
            next[k] &= ~out[k];
            out[k] |= next[k];
            grew |= next[k] != 0;
        }
        if (!grew) break;
        frontier.swap(next);
    }
}

bool distance_at_most(const Graph& g, Vertex u, Vertex v, unsigned d) {
    g.check(u);
    g.check(v);
    if (u == v) return true;
    std::vector<unsigned> dist(g.order(), std::numeric_limits<unsigned>::max());
    std::vector<Vertex> frontier{u};
    std::vector<Vertex> next;
    dist[u] = 0;
    for (unsigned depth = 0; depth < d && !frontier.empty(); ++depth) {
        next.clear();
        for (Vertex y : frontier) {
            for (Vertex z : g.neighbors(y)) {
                if (z == v) return true;
                if (dist[z] == std::numeric_limits<unsigned>::max()) {
                    dist[z] = depth + 1;
                    next.push_back(z);
                }
            }
        }
        frontier.swap(next);
    }
    return false;
}

namespace {

bool rows_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & b[i]) return true;
    }
    return false;
}

void require_girth(unsigned girth) {
    if (girth < 3) throw UsageError("girth threshold must be at least 3");
}

}  // namespace

bool is_legal_edge(const Graph& g, Vertex u, Vertex v, unsigned girth) {
    require_girth(girth);
    g.check(u);
    g.check(v);
    if (u == v || g.has_edge(u, v)) return false;
    if (girth != 5) return !distance_at_most(g, u, v, girth - 2);

    // depth-3 check from the lower-degree endpoint
    const Vertex lo = g.degree(u) <= g.degree(v) ? u : v;
    const Vertex hi = lo == u ? v : u;
    const auto hi_row = g.row(hi);
    if (rows_intersect(g.row(lo), hi_row)) return false;
    for (Vertex x : g.neighbors(lo)) {
        if (rows_intersect(g.row(x), hi_row)) return false;
    }
    return true;
}

std::vector<VertexPair> enumerate_legal_edges(const Graph& g, unsigned girth) {
    require_girth(girth);
    std::vector<VertexPair> out;
    Bitset near;
    const std::size_t n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        ball(g, u, girth - 2, near);
        for (std::size_t wi = (u + 1) >> 6; wi < near.size(); ++wi) {
            std::uint64_t free = ~near[wi];
            if (wi == ((u + 1) >> 6)) free &= ~std::uint64_t{0} << ((u + 1) & 63);
            if (wi == near.size() - 1 && (n & 63) != 0) free &= (std::uint64_t{1} << (n & 63)) - 1;
            while (free) {
                const auto v = static_cast<Vertex>(wi * 64 + std::countr_zero(free));
                out.push_back({u, v});
                free &= free - 1;
            }
        }
    }
    return out;
}

std::vector<VertexPair> max_degree_sum_legal_edges(const Graph& g, unsigned girth) {
    auto legal = enumerate_legal_edges(g, girth);
    if (legal.empty()) throw EmptyDomainError("graph has no legal edge");
    std::size_t best = 0;
    for (const auto& p : legal) best = std::max(best, g.degree(p.u) + g.degree(p.v));
    std::erase_if(legal, [&](const VertexPair& p) { return g.degree(p.u) + g.degree(p.v) != best; });
    return legal;
}

void add_edge(Graph& g, VertexPair p, unsigned girth) {
    if (!is_legal_edge(g, p.u, p.v, girth)) {
        throw ContractViolation("{" + std::to_string(p.u) + "," + std::to_string(p.v) +
                                "} is not a legal edge");
    }
    g.connect(p.u, p.v);
}

void remove_edge(Graph& g, VertexPair p) { g.disconnect(p.u, p.v); }

std::optional<unsigned> girth(const Graph& g) {
    const std::size_t n = g.order();
    constexpr unsigned kUnseen = std::numeric_limits<unsigned>::max();
    unsigned best = kUnseen;
    std::vector<unsigned> dist(n, kUnseen);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n && best > 3; ++s) {
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        parent[s] = s;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            // a cycle found from here on is at least 2*dist[x]+1 long
            if (2 * dist[x] + 1 >= best) break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == kUnseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        for (Vertex x : queue) dist[x] = kUnseen;
    }
    if (best == kUnseen) return std::nullopt;
    return best;
}

bool girth_at_least(const Graph& g, unsigned threshold) {
    if (threshold < 3) throw UsageError("girth threshold must be at least 3");
    const auto gi = girth(g);
    return !gi || *gi >= threshold;
}

Graph add_isolated_vertex(const Graph& g) {
    const auto e = g.edges();
    return Graph::from_edges(g.order() + 1, e);
}

Graph delete_vertex(const Graph& g, Vertex v) {
    g.check(v);
    Graph out(g.order() - 1);
    for (const auto& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        out.connect(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
    }
    return out;
}

namespace reference {

std::vector<VertexPair> enumerate_legal_edges(const Graph& g, unsigned girth) {
    require_girth(girth);
    std::vector<VertexPair> out;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v) && !distance_at_most(g, u, v, girth - 2)) out.push_back({u, v});
        }
    }
    return out;
}

}  // namespace reference

}  // namespace girth5
