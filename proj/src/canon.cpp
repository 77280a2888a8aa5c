#include "girth5/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>

#include "girth5/graph6.hpp"

namespace girth5 {

namespace {

// Ordered partition of the vertex set. Cells are contiguous ranges of `lab`;
// `cell_end[s]` is valid for every cell start s.
struct Partition {
    std::vector<Vertex> lab;
    std::vector<std::uint32_t> cell_of;   // vertex -> start of its cell
    std::vector<std::uint32_t> cell_end;  // cell start -> one past its end
    std::size_t cells = 0;

    bool discrete() const { return cells == lab.size(); }
};

class Refiner {
   public:
    explicit Refiner(const Graph& g)
        : g_(g), count_(g.order(), 0), in_queue_(g.order(), 0) {}

    void refine(Partition& p, std::vector<std::uint32_t> queue) {
        for (auto s : queue) in_queue_[s] = 1;
        std::size_t head = 0;
        while (head < queue.size() && !p.discrete()) {
            const std::uint32_t s = queue[head++];
            in_queue_[s] = 0;
            split_by(p, s, queue);
        }
        for (; head < queue.size(); ++head) in_queue_[queue[head]] = 0;
    }

   private:
    void split_by(Partition& p, std::uint32_t s, std::vector<std::uint32_t>& queue) {
        touched_.clear();
        for (std::uint32_t pos = s; pos < p.cell_end[s]; ++pos) {
            for (Vertex x : g_.neighbors(p.lab[pos])) {
                if (count_[x]++ == 0) touched_.push_back(x);
            }
        }
        cells_.clear();
        for (Vertex x : touched_) cells_.push_back(p.cell_of[x]);
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());

        for (std::uint32_t c : cells_) {
            const std::uint32_t e = p.cell_end[c];
            if (e - c == 1) continue;
            auto first = p.lab.begin() + c;
            auto last = p.lab.begin() + e;
            std::sort(first, last, [&](Vertex a, Vertex b) {
                return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
            });
            if (count_[p.lab[c]] == count_[p.lab[e - 1]]) continue;
            const bool was_queued = in_queue_[c] != 0;
            std::uint32_t start = c;
            for (std::uint32_t pos = c + 1; pos <= e; ++pos) {
                if (pos < e && count_[p.lab[pos]] == count_[p.lab[pos - 1]]) continue;
                p.cell_end[start] = pos;
                for (std::uint32_t q = start; q < pos; ++q) p.cell_of[p.lab[q]] = start;
                if (start != c) ++p.cells;
                if (!(start == c && was_queued)) {
                    in_queue_[start] = 1;
                    queue.push_back(start);
                }
                start = pos;
            }
        }
        for (Vertex x : touched_) count_[x] = 0;
    }

    const Graph& g_;
    std::vector<std::uint32_t> count_;
    std::vector<std::uint8_t> in_queue_;
    std::vector<Vertex> touched_;
    std::vector<std::uint32_t> cells_;
};

using Bits = std::vector<std::uint64_t>;

// Upper-triangle adjacency string in graph6 bit order, first bit in the MSB of
// word 0, so that word-wise comparison is lexicographic.
Bits leaf_bits(const Graph& g, const std::vector<Vertex>& lab) {
    const std::size_t n = lab.size();
    Bits bits((n * (n - (n > 0 ? 1 : 0)) / 2 + 63) / 64, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        const auto row = g.row(lab[j]);
        for (std::size_t i = 0; i < j; ++i, ++k) {
            if (test_bit(row, lab[i])) bits[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
        }
    }
    return bits;
}

struct Leaf {
    std::vector<Vertex> path;
    std::vector<Vertex> lab;
    Bits bits;
};

class Canonizer {
   public:
    explicit Canonizer(const Graph& g) : g_(g), refiner_(g) {}

    std::vector<Vertex> run() {
        const std::size_t n = g_.order();
        if (n == 0) return {};
        Partition root;
        root.lab.resize(n);
        std::iota(root.lab.begin(), root.lab.end(), Vertex{0});
        std::stable_sort(root.lab.begin(), root.lab.end(),
                         [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
        root.cell_of.assign(n, 0);
        root.cell_end.assign(n, 0);
        std::vector<std::uint32_t> queue;
        std::uint32_t start = 0;
        for (std::uint32_t pos = 1; pos <= n; ++pos) {
            if (pos < n && g_.degree(root.lab[pos]) == g_.degree(root.lab[pos - 1])) continue;
            root.cell_end[start] = pos;
            for (std::uint32_t q = start; q < pos; ++q) root.cell_of[root.lab[q]] = start;
            ++root.cells;
            queue.push_back(start);
            start = pos;
        }
        refiner_.refine(root, std::move(queue));
        std::vector<Vertex> path;
        search(root, path);
        return best_->lab;
    }

   private:
    std::size_t search(const Partition& p, std::vector<Vertex>& path) {
        const std::size_t level = path.size();
        if (p.discrete()) return leaf(p, path);

        // first smallest non-singleton cell
        std::uint32_t target = 0;
        std::uint32_t target_size = UINT32_MAX;
        for (std::uint32_t s = 0; s < p.lab.size(); s = p.cell_end[s]) {
            const std::uint32_t size = p.cell_end[s] - s;
            if (size > 1 && size < target_size) {
                target = s;
                target_size = size;
            }
        }
        std::vector<Vertex> members(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
        std::sort(members.begin(), members.end());

        std::vector<Vertex> explored;
        for (Vertex v : members) {
            if (!explored.empty() && equivalent_to_explored(v, explored, path)) continue;
            Partition child = p;
            individualize(child, target, v);
            refiner_.refine(child, {target});
            path.push_back(v);
            const std::size_t r = search(child, path);
            path.pop_back();
            if (r < level) return r;
            explored.push_back(v);
        }
        return level;
    }

    static void individualize(Partition& p, std::uint32_t cell, Vertex v) {
        const std::uint32_t end = p.cell_end[cell];
        auto it = std::find(p.lab.begin() + cell, p.lab.begin() + end, v);
        std::iter_swap(p.lab.begin() + cell, it);
        p.cell_end[cell] = cell + 1;
        p.cell_end[cell + 1] = end;
        for (std::uint32_t q = cell + 1; q < end; ++q) p.cell_of[p.lab[q]] = cell + 1;
        ++p.cells;
    }

    std::size_t leaf(const Partition& p, const std::vector<Vertex>& path) {
        Bits bits = leaf_bits(g_, p.lab);
        if (!first_) {
            first_ = Leaf{path, p.lab, bits};
            best_ = first_;
            return path.size();
        }
        if (bits == first_->bits) {
            record_automorphism(first_->lab, p.lab);
            return common_prefix(path, first_->path);
        }
        if (bits == best_->bits) {
            record_automorphism(best_->lab, p.lab);
            return common_prefix(path, best_->path);
        }
        if (bits < best_->bits) best_ = Leaf{path, p.lab, std::move(bits)};
        return path.size();
    }

    void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        std::vector<Vertex> gamma(from.size());
        for (std::size_t i = 0; i < from.size(); ++i) gamma[from[i]] = to[i];
        automorphisms_.push_back(std::move(gamma));
    }

    static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return k;
    }

    // Orbits of the group generated by the known automorphisms that fix
    // every vertex on `path`.
    bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored,
                                const std::vector<Vertex>& path) {
        if (automorphisms_.empty()) return false;
        std::vector<Vertex> parent(g_.order());
        std::iota(parent.begin(), parent.end(), Vertex{0});
        auto find = [&](Vertex x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            if (!std::all_of(path.begin(), path.end(), [&](Vertex x) { return gamma[x] == x; })) {
                continue;
            }
            any = true;
            for (Vertex x = 0; x < gamma.size(); ++x) {
                const Vertex a = find(x);
                const Vertex b = find(gamma[x]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        if (!any) return false;
        const Vertex root = find(v);
        return std::any_of(explored.begin(), explored.end(),
                           [&](Vertex w) { return find(w) == root; });
    }

    const Graph& g_;
    Refiner refiner_;
    std::optional<Leaf> first_;
    std::optional<Leaf> best_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

// 1-dimensional Weisfeiler-Leman on the disjoint union of two graphs with a
// shared color namespace. Returns false as soon as the two halves disagree
// on their color histograms.
class JointRefinement {
   public:
    JointRefinement(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {}

    bool stabilize(std::vector<std::uint32_t>& colors) const {
        std::size_t classes = count_classes(colors);
        while (true) {
            std::map<std::vector<std::uint32_t>, std::uint32_t> names;
            std::vector<std::vector<std::uint32_t>> sig(2 * n_);
            for (std::size_t x = 0; x < 2 * n_; ++x) {
                const Graph& g = x < n_ ? a_ : b_;
                const auto v = static_cast<Vertex>(x < n_ ? x : x - n_);
                const std::size_t offset = x < n_ ? 0 : n_;
                auto& s = sig[x];
                s.push_back(colors[x]);
                for (Vertex y : g.neighbors(v)) s.push_back(colors[offset + y]);
                std::sort(s.begin() + 1, s.end());
                names.emplace(s, 0);
            }
            std::uint32_t next = 0;
            for (auto& [key, id] : names) id = next++;
            for (std::size_t x = 0; x < 2 * n_; ++x) colors[x] = names[sig[x]];
            if (!balanced(colors)) return false;
            if (names.size() == classes) return true;
            classes = names.size();
        }
    }

    bool balanced(const std::vector<std::uint32_t>& colors) const {
        std::map<std::uint32_t, long> hist;
        for (std::size_t x = 0; x < n_; ++x) ++hist[colors[x]];
        for (std::size_t x = n_; x < 2 * n_; ++x) --hist[colors[x]];
        return std::all_of(hist.begin(), hist.end(), [](const auto& kv) { return kv.second == 0; });
    }

   private:
    static std::size_t count_classes(const std::vector<std::uint32_t>& colors) {
        std::vector<std::uint32_t> c = colors;
        std::sort(c.begin(), c.end());
        return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
    }

    const Graph& a_;
    const Graph& b_;
    std::size_t n_;
};

class IsomorphismSearch {
   public:
    IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()), wl_(a, b) {}

    bool run() {
        std::vector<std::uint32_t> colors(2 * n_);
        for (Vertex v = 0; v < n_; ++v) {
            colors[v] = static_cast<std::uint32_t>(a_.degree(v));
            colors[n_ + v] = static_cast<std::uint32_t>(b_.degree(v));
        }
        if (!wl_.stabilize(colors)) return false;
        return extend(colors);
    }

   private:
    bool extend(const std::vector<std::uint32_t>& colors) {
        // smallest non-singleton color class of the first graph
        std::map<std::uint32_t, std::size_t> size;
        for (std::size_t x = 0; x < n_; ++x) ++size[colors[x]];
        std::optional<std::uint32_t> pick;
        for (const auto& [c, s] : size) {
            if (s > 1 && (!pick || s < size[*pick])) pick = c;
        }
        if (!pick) return bijection_is_isomorphism(colors);

        Vertex u = 0;
        while (colors[u] != *pick) ++u;
        const std::uint32_t fresh =
            *std::max_element(colors.begin(), colors.end()) + 1;
        for (Vertex w = 0; w < n_; ++w) {
            if (colors[n_ + w] != *pick) continue;
            auto next = colors;
            next[u] = fresh;
            next[n_ + w] = fresh;
            if (wl_.stabilize(next) && extend(next)) return true;
        }
        return false;
    }

    bool bijection_is_isomorphism(const std::vector<std::uint32_t>& colors) const {
        std::map<std::uint32_t, Vertex> target;
        for (Vertex w = 0; w < n_; ++w) target[colors[n_ + w]] = w;
        std::vector<Vertex> f(n_);
        for (Vertex v = 0; v < n_; ++v) f[v] = target.at(colors[v]);
        for (const auto& e : a_.edges()) {
            if (!b_.has_edge(f[e.u], f[e.v])) return false;
        }
        return true;
    }

    const Graph& a_;
    const Graph& b_;
    std::size_t n_;
    JointRefinement wl_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<Vertex> label(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<Vertex>(i);
    Graph out(g.order());
    for (const auto& e : g.edges()) out.connect(label[e.u], label[e.v]);
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{encode_graph6(relabel(g, canonical_labeling(g)))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    if (a.order() == 0) return true;
    return IsomorphismSearch(a, b).run();
}

}  // namespace girth5
