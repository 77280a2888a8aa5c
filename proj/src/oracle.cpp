#include "girth5/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>

#include "girth5/errors.hpp"

namespace girth5 {

namespace {

struct BudgetExhausted {};

// Depth-first search for a girth >= 5 graph on k vertices with at least
// `target` edges, minimum degree >= min_deg and maximum degree <= max_deg.
class ExtremalSearch {
   public:
    ExtremalSearch(std::size_t k, std::size_t target, std::size_t min_deg, std::size_t max_deg,
                   std::uint64_t& nodes_left)
        : k_(k), target_(target), min_deg_(min_deg), max_deg_(max_deg), nodes_left_(nodes_left),
          adj_(k, 0), deg_(k, 0), open_(k, k - 1), cap_(k, max_deg) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) pairs_.emplace_back(i, j);
        }
    }

    std::optional<Graph> run() {
        if (dfs(0)) {
            Graph g(k_);
            for (std::size_t i = 0; i < k_; ++i) {
                for (std::size_t j = i + 1; j < k_; ++j) {
                    if ((adj_[i] >> j) & 1u) g.connect(static_cast<Vertex>(i), static_cast<Vertex>(j));
                }
            }
            return g;
        }
        return std::nullopt;
    }

   private:
    bool legal(std::size_t i, std::size_t j) const {
        if (adj_[i] & adj_[j]) return false;
        for (std::uint64_t rest = adj_[i]; rest; rest &= rest - 1) {
            if (adj_[std::countr_zero(rest)] & adj_[j]) return false;
        }
        return true;
    }

    bool promising() const {
        std::size_t slack = 0;
        for (std::size_t v = 0; v < k_; ++v) {
            const std::size_t room = cap_[v] > deg_[v] ? cap_[v] - deg_[v] : 0;
            const std::size_t reachable = std::min(room, open_[v]);
            if (deg_[v] + reachable < min_deg_) return false;
            slack += reachable;
        }
        return edges_ + slack / 2 >= target_;
    }

    bool dfs(std::size_t idx) {
        if (nodes_left_ == 0) throw BudgetExhausted{};
        --nodes_left_;
        if (!promising()) return false;
        if (idx == pairs_.size()) return true;

        const auto [i, j] = pairs_[idx];
        // leaving row 0: vertex 0 is a maximum-degree vertex
        const bool row0_done = i == 1 && j == 2;
        std::vector<std::size_t> saved_cap;
        if (row0_done) {
            saved_cap = cap_;
            for (std::size_t v = 1; v < k_; ++v) cap_[v] = std::min(cap_[v], deg_[0]);
            if (!promising()) {
                cap_ = std::move(saved_cap);
                return false;
            }
        }

        --open_[i];
        --open_[j];
        bool found = false;
        // row 0 neighbors are a prefix 1..deg(0)
        const bool prefix_ok = i != 0 || j == 1 || ((adj_[0] >> (j - 1)) & 1u);
        if (prefix_ok && deg_[i] < cap_[i] && deg_[j] < cap_[j] && legal(i, j)) {
            adj_[i] |= std::uint64_t{1} << j;
            adj_[j] |= std::uint64_t{1} << i;
            ++deg_[i];
            ++deg_[j];
            ++edges_;
            found = dfs(idx + 1);
            if (!found) {
                adj_[i] &= ~(std::uint64_t{1} << j);
                adj_[j] &= ~(std::uint64_t{1} << i);
                --deg_[i];
                --deg_[j];
                --edges_;
            }
        }
        if (!found) found = dfs(idx + 1);
        if (!found) {
            ++open_[i];
            ++open_[j];
        }
        if (row0_done && !found) cap_ = std::move(saved_cap);
        return found;
    }

    std::size_t k_;
    std::size_t target_;
    std::size_t min_deg_;
    std::size_t max_deg_;
    std::uint64_t& nodes_left_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> deg_;
    std::vector<std::size_t> open_;
    std::vector<std::size_t> cap_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::size_t edges_ = 0;
};

Graph with_pendant(const Graph& g) {
    Graph out = add_isolated_vertex(g);
    if (g.order() > 0) out.connect(0, static_cast<Vertex>(g.order()));
    return out;
}

}  // namespace

BoundRecord exact_max_size(std::size_t n, std::uint64_t budget) {
    if (n == 0) throw UsageError("order must be positive");
    if (n > 64) throw UsageError("exact search supports orders up to 64");

    std::uint64_t nodes_left = budget;
    Graph best(1);
    std::size_t ex_prev = 0;
    for (std::size_t k = 2; k <= n; ++k) {
        const std::size_t floor_value = ex_prev + 1;  // pendant edge on the previous witness
        std::size_t upper = k * (k - 1) / 2;
        if (k >= 3) upper = std::min(upper, k * ex_prev / (k - 2));

        std::optional<Graph> witness;
        try {
            for (std::size_t t = upper; t > floor_value && !witness; --t) {
                const std::size_t min_deg = t - ex_prev;
                const std::size_t max_deg = (k - 1) / min_deg;
                if (k * max_deg / 2 < t) continue;
                witness = ExtremalSearch(k, t, min_deg, max_deg, nodes_left).run();
            }
        } catch (const BudgetExhausted&) {
            Graph lower = with_pendant(best);
            BoundRecord rec;
            rec.n = n;
            rec.kind = BoundKind::lower;
            // carry the pendant construction up to order n
            while (lower.order() < n) lower = with_pendant(lower);
            rec.value = lower.size();
            rec.witness = canonical_form(lower);
            rec.witness_graph = std::move(lower);
            return rec;
        }
        best = witness ? std::move(*witness) : with_pendant(best);
        ex_prev = best.size();
    }

    BoundRecord rec;
    rec.n = n;
    rec.kind = BoundKind::exact;
    rec.value = best.size();
    rec.witness = canonical_form(best);
    rec.witness_graph = std::move(best);
    return rec;
}

std::uint64_t moore_bound(std::uint64_t k, std::uint64_t g) {
    if (k < 2) throw UsageError("Moore bound needs degree k >= 2");
    if (g < 3) throw UsageError("Moore bound needs girth g >= 3");
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t t = g / 2;
    // sum_{i=0}^{t-1} (k-1)^i
    std::uint64_t sum = 0;
    std::uint64_t term = 1;
    for (std::uint64_t i = 0; i < t; ++i) {
        if (sum > kMax - term) throw UsageError("Moore bound overflows 64 bits");
        sum += term;
        if (i + 1 < t) {
            if (term > kMax / (k - 1)) throw UsageError("Moore bound overflows 64 bits");
            term *= k - 1;
        }
    }
    if (g % 2 == 1) {
        if (sum > (kMax - 1) / k) throw UsageError("Moore bound overflows 64 bits");
        return 1 + k * sum;
    }
    if (sum > kMax / 2) throw UsageError("Moore bound overflows 64 bits");
    return 2 * sum;
}

WitnessVerdict verify_witness(const Graph& g, std::size_t claimed_n, std::size_t claimed_size,
                              unsigned girth_threshold) {
    WitnessVerdict v;
    v.order_ok = g.order() == claimed_n;
    v.size_ok = g.size() == claimed_size;
    v.girth_ok = girth_at_least(g, girth_threshold);
    return v;
}

bool DegreeSetReport::biregular_girth5() const {
    return degree_set.size() == 2 && girth && *girth == 5;
}

DegreeSetReport degree_set_report(const Graph& g) {
    DegreeSetReport r;
    r.degree_set = g.degrees();
    std::sort(r.degree_set.begin(), r.degree_set.end());
    r.degree_set.erase(std::unique(r.degree_set.begin(), r.degree_set.end()), r.degree_set.end());
    r.order = g.order();
    r.girth = girth(g);
    return r;
}

std::vector<BiregularCandidate> biregular_candidates(std::span<const Graph> graphs) {
    std::map<std::pair<std::size_t, std::size_t>, BiregularCandidate> best;
    for (const auto& g : graphs) {
        const auto rep = degree_set_report(g);
        if (!rep.biregular_girth5()) continue;
        BiregularCandidate c{rep.degree_set[0], rep.degree_set[1], g.order(), g.size(),
                             canonical_form(g)};
        auto [it, inserted] = best.emplace(std::pair{c.r, c.m}, c);
        if (!inserted && (c.order < it->second.order ||
                          (c.order == it->second.order && c.key < it->second.key))) {
            it->second = std::move(c);
        }
    }
    std::vector<BiregularCandidate> out;
    for (auto& [k, c] : best) out.push_back(std::move(c));
    return out;
}

}  // namespace girth5
