#include "girth5/best_store.hpp"

#include <algorithm>

#include "girth5/errors.hpp"

namespace girth5 {

bool ranks_before(std::size_t size_a, const CanonicalForm& a, std::size_t size_b,
                  const CanonicalForm& b) {
    return size_a != size_b ? size_a > size_b : a < b;
}

BestStore::BestStore(std::size_t capacity, unsigned girth) : capacity_(capacity), girth_(girth) {
    if (capacity == 0) throw UsageError("store capacity must be positive");
}

bool BestStore::insert(const Graph& g) {
    if (!girth_at_least(g, girth_)) {
        throw ContractViolation("refusing to store a graph with a cycle shorter than " +
                                std::to_string(girth_));
    }
    return insert(g, canonical_form(g));
}

bool BestStore::insert(Graph g, CanonicalForm key) {
    if (!girth_at_least(g, girth_)) {
        throw ContractViolation("refusing to store a graph with a cycle shorter than " +
                                std::to_string(girth_));
    }
    auto& bucket = by_order_[g.order()];
    if (bucket.keys.contains(key.key)) return false;

    const std::size_t size = g.size();
    auto pos = std::lower_bound(bucket.ranked.begin(), bucket.ranked.end(), size,
                                [&](const StoreEntry& e, std::size_t) {
                                    return ranks_before(e.graph.size(), e.key, size, key);
                                });
    if (bucket.ranked.size() >= capacity_ && pos == bucket.ranked.end()) return false;
    bucket.keys.insert(key.key);
    bucket.ranked.insert(pos, StoreEntry{std::move(key), std::move(g)});
    if (bucket.ranked.size() > capacity_) {
        bucket.keys.erase(bucket.ranked.back().key.key);
        bucket.ranked.pop_back();
    }
    return true;
}

std::vector<Graph> BestStore::top_ell(std::size_t n, std::size_t ell) const {
    std::vector<Graph> out;
    const auto& ranked = entries(n);
    const std::size_t k = std::min(ell, ranked.size());
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(ranked[i].graph);
    return out;
}

const std::vector<StoreEntry>& BestStore::entries(std::size_t n) const {
    static const std::vector<StoreEntry> kNone;
    auto it = by_order_.find(n);
    return it == by_order_.end() ? kNone : it->second.ranked;
}

std::optional<std::size_t> BestStore::best_size(std::size_t n) const {
    const auto& ranked = entries(n);
    if (ranked.empty()) return std::nullopt;
    return ranked.front().graph.size();
}

std::vector<std::size_t> BestStore::orders() const {
    std::vector<std::size_t> out;
    for (const auto& [n, bucket] : by_order_) {
        if (!bucket.ranked.empty()) out.push_back(n);
    }
    return out;
}

bool BestStore::contains(std::size_t n, const CanonicalForm& key) const {
    auto it = by_order_.find(n);
    return it != by_order_.end() && it->second.keys.contains(key.key);
}

std::size_t BestStore::count(std::size_t n) const { return entries(n).size(); }

}  // namespace girth5
