#include "girth5/local_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <limits>
#include <string>

#include "girth5/errors.hpp"
#include "girth5/rng.hpp"

namespace girth5 {

void SearchParams::validate() const {
    if (total_num_iters == 0) throw UsageError("total_num_iters must be positive");
    if (num_iters_too_recent == 0) throw UsageError("num_iters_too_recent must be positive");
    if (k_max == 0) throw UsageError("k_max must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p must lie in [0, 1]");
    if (girth < 3) throw UsageError("girth threshold must be at least 3");
}

DeletionLedger::DeletionLedger(std::size_t order)
    : n_(order), last_(order * (order > 0 ? order - 1 : 0) / 2, -1) {}

void DeletionLedger::bad_pair(VertexPair p) const {
    throw UsageError("pair {" + std::to_string(p.u) + "," + std::to_string(p.v) +
                     "} invalid for order " + std::to_string(n_));
}

void DeletionLedger::record(VertexPair p, std::uint64_t iteration) {
    last_[slot(p)] = static_cast<std::int64_t>(iteration);
}

std::optional<std::uint64_t> DeletionLedger::last_deleted(VertexPair p) const {
    const auto v = last_[slot(p)];
    if (v < 0) return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

bool DeletionLedger::eligible(VertexPair p, std::uint64_t current, std::uint64_t window) const {
    const auto v = last_[slot(p)];
    return v < 0 || current - static_cast<std::uint64_t>(v) > window;
}

namespace {

void collect_eligible(const Graph& g, const DeletionLedger& ledger, std::uint64_t current,
                      std::uint64_t window, std::vector<VertexPair>& out) {
    out.clear();
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v > u && ledger.eligible({u, v}, current, window)) out.push_back({u, v});
        }
    }
}

// Legal pair set maintained across edits. Additions only ever make pairs
// illegal, and only pairs that are close to both endpoints of the new edge;
// removals only ever make pairs legal, and only pairs close to the endpoints
// of a removed edge.
class IncrementalLegalSet {
   public:
    explicit IncrementalLegalSet(unsigned girth) : girth_(girth) {}

    std::size_t count() const { return pairs_.size(); }
    VertexPair at(std::size_t i) const { return pairs_[i]; }
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& p : pairs_) fn(p);
    }

    void reset(const Graph& g) {
        pairs_ = enumerate_legal_edges(g, girth_);
        const std::size_t n = g.order();
        dist_a_.assign(n, kFar);
        dist_b_.assign(n, kFar);
    }

    void before_add(const Graph& g, VertexPair e) {
        // A pair (x,y) turns illegal iff a path x..u-v..y of length
        // <= girth-2 now exists.
        const unsigned reach = girth_ - 3;
        bfs(g, e.u, reach, dist_a_, seen_a_);
        bfs(g, e.v, reach, dist_b_, seen_b_);
        const unsigned limit = girth_ - 3;
        std::erase_if(pairs_, [&](const VertexPair& p) {
            const unsigned via_uv = dist_a_[p.u] + dist_b_[p.v];
            const unsigned via_vu = dist_a_[p.v] + dist_b_[p.u];
            return std::min(via_uv, via_vu) <= limit;
        });
        for (Vertex x : seen_a_) dist_a_[x] = kFar;
        for (Vertex x : seen_b_) dist_b_[x] = kFar;
    }

    void after_add(const Graph&, VertexPair) {}

    void before_removals(const Graph& g, const std::vector<VertexPair>& victims) {
        near_.assign(g.words(), 0);
        for (const auto& e : victims) {
            for (Vertex end : {e.u, e.v}) {
                ball(g, end, girth_ - 3, scratch_);
                for (std::size_t i = 0; i < near_.size(); ++i) near_[i] |= scratch_[i];
            }
        }
    }

    void after_removals(const Graph& g) {
        auto& zone = zone_;
        zone.clear();
        for (Vertex x = 0; x < g.order(); ++x) {
            if (test_bit(near_, x)) zone.push_back(x);
        }
        fresh_.clear();
        for (std::size_t a = 0; a < zone.size(); ++a) {
            ball(g, zone[a], girth_ - 2, scratch_);
            for (std::size_t b = a + 1; b < zone.size(); ++b) {
                if (!test_bit(scratch_, zone[b])) fresh_.push_back({zone[a], zone[b]});
            }
        }
        merged_.clear();
        std::set_union(pairs_.begin(), pairs_.end(), fresh_.begin(), fresh_.end(),
                       std::back_inserter(merged_));
        pairs_.swap(merged_);
    }

   private:
    static constexpr unsigned kFar = std::numeric_limits<unsigned>::max() / 4;

    static void bfs(const Graph& g, Vertex s, unsigned radius, std::vector<unsigned>& dist,
                    std::vector<Vertex>& seen) {
        seen.clear();
        seen.push_back(s);
        dist[s] = 0;
        for (std::size_t head = 0; head < seen.size(); ++head) {
            const Vertex x = seen[head];
            if (dist[x] == radius) continue;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == kFar) {
                    dist[y] = dist[x] + 1;
                    seen.push_back(y);
                }
            }
        }
    }

    unsigned girth_;
    std::vector<VertexPair> pairs_;
    std::vector<unsigned> dist_a_, dist_b_;
    std::vector<Vertex> seen_a_, seen_b_;
    Bitset near_, scratch_;
    std::vector<VertexPair> fresh_, merged_;
    std::vector<Vertex> zone_;
};

// Orders up to 64: the search works on one adjacency word per vertex and one
// word of legal partners per vertex, and only builds a Graph when recording a
// result or feeding an observer. Additions clear the pairs joined by a new
// short path through the edge; removals rebuild every ball by OR-ing rows,
// which at this size is cheaper than tracking the affected zone.
class WordKernel {
   public:
    WordKernel(const Graph& seed, unsigned girth)
        : girth_(girth), n_(static_cast<Vertex>(seed.order())), adj_(n_), deg_(n_), legal_(n_),
          ball_(n_), grown_(n_) {
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        for (Vertex v = 0; v < n_; ++v) {
            adj_[v] = seed.row(v)[0];
            deg_[v] = seed.degree(v);
        }
        m_ = seed.size();
        rebuild();
    }

    std::size_t size() const { return m_; }
    std::size_t degree(Vertex v) const { return deg_[v]; }
    std::size_t count() const { return count_; }

    VertexPair at(std::size_t i) const {
        for (Vertex u = 0; u < n_; ++u) {
            std::uint64_t row = legal_[u] & above(u);
            const auto c = static_cast<std::size_t>(std::popcount(row));
            if (i < c) {
                for (; i > 0; --i) row &= row - 1;
                return {u, static_cast<Vertex>(std::countr_zero(row))};
            }
            i -= c;
        }
        throw ContractViolation("legal pair index out of range");
    }

    template <class Fn>
    void for_each_legal(Fn&& fn) const {
        for (Vertex u = 0; u < n_; ++u) {
            for (std::uint64_t row = legal_[u] & above(u); row; row &= row - 1) {
                fn(VertexPair{u, static_cast<Vertex>(std::countr_zero(row))});
            }
        }
    }

    void eligible(const DeletionLedger& ledger, std::uint64_t current, std::uint64_t window,
                  std::vector<VertexPair>& out) const {
        out.clear();
        for (Vertex u = 0; u < n_; ++u) {
            for (std::uint64_t row = adj_[u] & above(u); row; row &= row - 1) {
                const VertexPair p{u, static_cast<Vertex>(std::countr_zero(row))};
                if (ledger.eligible(p, current, window)) out.push_back(p);
            }
        }
    }

    void add(VertexPair e) {
        // x at distance d from u and y within girth-3-d of v get joined by a
        // path shorter than girth-1 once u-v exists
        const unsigned r = girth_ - 3;
        spheres(e.u, r, sphere_a_);
        spheres(e.v, r, sphere_b_);
        for (unsigned d = 0; d <= r; ++d) {
            std::uint64_t within_b = 0, within_a = 0;
            for (unsigned k = 0; k <= r - d; ++k) {
                within_b |= sphere_b_[k];
                within_a |= sphere_a_[k];
            }
            for (std::uint64_t xs = sphere_a_[d]; xs; xs &= xs - 1) clear(static_cast<Vertex>(std::countr_zero(xs)), within_b);
            for (std::uint64_t ys = sphere_b_[d]; ys; ys &= ys - 1) clear(static_cast<Vertex>(std::countr_zero(ys)), within_a);
        }
        adj_[e.u] |= std::uint64_t{1} << e.v;
        adj_[e.v] |= std::uint64_t{1} << e.u;
        ++deg_[e.u];
        ++deg_[e.v];
        ++m_;
    }

    void begin_removals(const std::vector<VertexPair>&) {}

    void remove(VertexPair e) {
        adj_[e.u] &= ~(std::uint64_t{1} << e.v);
        adj_[e.v] &= ~(std::uint64_t{1} << e.u);
        --deg_[e.u];
        --deg_[e.v];
        --m_;
    }

    void end_removals() { rebuild(); }

    Graph graph() const {
        Graph g(n_);
        for (Vertex u = 0; u < n_; ++u) {
            for (std::uint64_t row = adj_[u] & above(u); row; row &= row - 1) {
                g.connect(u, static_cast<Vertex>(std::countr_zero(row)));
            }
        }
        return g;
    }

   private:
    static constexpr auto kAbove = [] {
        std::array<std::uint64_t, 64> t{};
        for (unsigned u = 0; u < 63; ++u) t[u] = ~std::uint64_t{0} << (u + 1);
        return t;
    }();
    static std::uint64_t above(Vertex u) { return kAbove[u]; }

    void rebuild() {
        for (Vertex v = 0; v < n_; ++v) ball_[v] = adj_[v] | (std::uint64_t{1} << v);
        for (unsigned step = 1; step < girth_ - 2; ++step) {
            for (Vertex v = 0; v < n_; ++v) {
                std::uint64_t acc = ball_[v];
                for (std::uint64_t nb = adj_[v]; nb; nb &= nb - 1) acc |= ball_[std::countr_zero(nb)];
                grown_[v] = acc;
            }
            ball_.swap(grown_);
        }
        count_ = 0;
        for (Vertex v = 0; v < n_; ++v) {
            legal_[v] = full_ & ~ball_[v];
            count_ += static_cast<std::size_t>(std::popcount(legal_[v] & above(v)));
        }
    }

    void spheres(Vertex x, unsigned r, std::vector<std::uint64_t>& out) const {
        out.assign(r + 1, 0);
        out[0] = std::uint64_t{1} << x;
        std::uint64_t seen = out[0];
        for (unsigned d = 1; d <= r; ++d) {
            std::uint64_t next = 0;
            for (std::uint64_t f = out[d - 1]; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
            out[d] = next & ~seen;
            seen |= out[d];
        }
    }

    // each pair is counted in the row of its smaller endpoint
    void clear(Vertex x, std::uint64_t mask) {
        const std::uint64_t gone = legal_[x] & mask;
        legal_[x] &= ~mask;
        count_ -= static_cast<std::size_t>(std::popcount(gone & above(x)));
    }

    unsigned girth_;
    Vertex n_;
    std::uint64_t full_ = 0;
    std::size_t m_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> deg_;
    std::vector<std::uint64_t> legal_, ball_, grown_;
    std::vector<std::uint64_t> sphere_a_, sphere_b_;
};

class RecomputedLegalSet {
   public:
    explicit RecomputedLegalSet(unsigned girth) : girth_(girth) {}

    std::size_t count() const { return pairs_.size(); }
    VertexPair at(std::size_t i) const { return pairs_[i]; }
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& p : pairs_) fn(p);
    }

    void reset(const Graph& g) { pairs_ = reference::enumerate_legal_edges(g, girth_); }
    void before_add(const Graph&, VertexPair) {}
    void after_add(const Graph& g, VertexPair) { reset(g); }
    void before_removals(const Graph&, const std::vector<VertexPair>&) {}
    void after_removals(const Graph& g) { reset(g); }

   private:
    unsigned girth_;
    std::vector<VertexPair> pairs_;
};

// Any order: a Graph plus a sorted vector of legal pairs.
template <class LegalSet>
class ListKernel {
   public:
    ListKernel(const Graph& seed, unsigned girth) : g_(seed), legal_(girth) { legal_.reset(g_); }

    std::size_t size() const { return g_.size(); }
    std::size_t degree(Vertex v) const { return g_.degree(v); }
    std::size_t count() const { return legal_.count(); }
    VertexPair at(std::size_t i) const { return legal_.at(i); }
    template <class Fn>
    void for_each_legal(Fn&& fn) const {
        legal_.for_each(fn);
    }

    void eligible(const DeletionLedger& ledger, std::uint64_t current, std::uint64_t window,
                  std::vector<VertexPair>& out) const {
        collect_eligible(g_, ledger, current, window, out);
    }

    void add(VertexPair e) {
        legal_.before_add(g_, e);
        g_.connect(e.u, e.v);
        legal_.after_add(g_, e);
    }
    void begin_removals(const std::vector<VertexPair>& victims) { legal_.before_removals(g_, victims); }
    void remove(VertexPair e) { g_.disconnect(e.u, e.v); }
    void end_removals() { legal_.after_removals(g_); }

    const Graph& graph() const { return g_; }

   private:
    Graph g_;
    LegalSet legal_;
};

template <class Kernel>
SearchResult run_search(const Graph& seed, const SearchParams& params,
                        const EditObserver& observer) {
    Rng rng(params.rng_seed);
    SearchResult result;
    result.graphs.push_back(seed);
    result.best_size = seed.size();

    Kernel k(seed, params.girth);
    DeletionLedger ledger(seed.order());
    std::vector<VertexPair> ties;
    std::vector<VertexPair> eligible;
    std::vector<VertexPair> victims;

    auto notify = [&](EditKind kind, VertexPair e, std::uint64_t iter) {
        if (observer) {
            const Graph& before = k.graph();
            observer(EditEvent{kind, e, before, iter});
        }
    };

    std::uint64_t guard = std::max<std::uint64_t>(1, seed.size());
    std::uint64_t remaining = params.total_num_iters;
    std::uint64_t iter = 0;
    while (remaining > 0 && guard > 0) {
        while (k.count() > 0) {
            VertexPair e;
            if (rng.uniform_real() < params.p) {
                std::size_t best = 0;
                ties.clear();
                k.for_each_legal([&](const VertexPair& c) {
                    const std::size_t s = k.degree(c.u) + k.degree(c.v);
                    if (s > best) {
                        best = s;
                        ties.clear();
                    }
                    if (s == best) ties.push_back(c);
                });
                e = ties[rng.uniform_index(ties.size())];
            } else {
                e = k.at(rng.uniform_index(k.count()));
            }
            notify(EditKind::add, e, iter);
            k.add(e);
        }
        assert(girth_at_least(k.graph(), params.girth));

        if (k.size() > result.best_size) {
            result.graphs.push_back(k.graph());
            result.best_size = k.size();
        }

        k.eligible(ledger, iter, params.num_iters_too_recent, eligible);
        guard = eligible.size();
        if (guard >= 1) {
            const std::size_t draw = 1 + rng.uniform_index(params.k_max);
            const std::size_t count = std::min<std::size_t>(draw, eligible.size());
            for (std::size_t i = 0; i < count; ++i) {
                const std::size_t j = i + rng.uniform_index(eligible.size() - i);
                std::swap(eligible[i], eligible[j]);
            }
            victims.assign(eligible.begin(), eligible.begin() + static_cast<std::ptrdiff_t>(count));
            k.begin_removals(victims);
            for (const auto& e : victims) {
                notify(EditKind::remove, e, iter);
                k.remove(e);
                ledger.record(e, iter);
            }
            k.end_removals();
        }
        --remaining;
        ++iter;
    }
    result.iterations_run = iter;
    return result;
}

void check_inputs(const Graph& seed, const SearchParams& params) {
    params.validate();
    if (seed.order() == 0) throw UsageError("local search needs a seed with at least one vertex");
    if (!girth_at_least(seed, params.girth)) {
        throw ContractViolation("seed graph has a cycle shorter than " +
                                std::to_string(params.girth));
    }
}

}  // namespace

std::vector<VertexPair> eligible_deletions(const Graph& g, const DeletionLedger& ledger,
                                           std::uint64_t current_iter, std::uint64_t window) {
    std::vector<VertexPair> out;
    collect_eligible(g, ledger, current_iter, window, out);
    return out;
}

SearchResult local_search(const Graph& seed, const SearchParams& params,
                          const EditObserver& observer) {
    check_inputs(seed, params);
    if (seed.order() <= 64) return run_search<WordKernel>(seed, params, observer);
    return run_search<ListKernel<IncrementalLegalSet>>(seed, params, observer);
}

namespace reference {

SearchResult local_search(const Graph& seed, const SearchParams& params,
                          const EditObserver& observer) {
    check_inputs(seed, params);
    return run_search<ListKernel<RecomputedLegalSet>>(seed, params, observer);
}

}  // namespace reference

}  // namespace girth5
