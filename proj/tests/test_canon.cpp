#include <random>
#include <set>

#include "doctest.h"
#include "girth5/canon.hpp"
#include "girth5/families.hpp"
#include "girth5/graph6.hpp"
#include "oracles.hpp"

using namespace girth5;
namespace ts = testsupport;

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    const auto shift = static_cast<Vertex>(a.order());
    for (const auto& e : a.edges()) g.connect(e.u, e.v);
    for (const auto& e : b.edges()) g.connect(e.u + shift, e.v + shift);
    return g;
}

}  // namespace

TEST_SUITE("canon") {
    TEST_CASE("key is the graph6 of the relabeled graph") {
        const Graph pet = families::petersen();
        const auto order = canonical_labeling(pet);
        CHECK(order.size() == 10);
        CHECK(std::set<Vertex>(order.begin(), order.end()).size() == 10);
        CHECK(canonical_form(pet).key == encode_graph6(relabel(pet, order)));
    }

    TEST_CASE("relabel puts vertex order[i] at position i") {
        const Graph p = families::path(3);  // 0-1-2
        const Graph r = relabel(p, {1, 0, 2});
        CHECK(r.has_edge(0, 1));
        CHECK(r.has_edge(0, 2));
        CHECK_FALSE(r.has_edge(1, 2));
    }

    TEST_CASE("examples") {
        std::mt19937_64 rng(3);
        const Graph c5 = families::cycle(5);
        CHECK(canonical_form(c5) == canonical_form(ts::permuted(c5, ts::random_permutation(5, rng))));
        CHECK(canonical_form(c5) != canonical_form(families::path(5)));
        Graph a(4), b(4);
        a.connect(0, 1);
        b.connect(0, 1);
        b.connect(1, 2);
        CHECK(canonical_form(a) != canonical_form(b));
        CHECK(are_isomorphic(c5, ts::permuted(c5, ts::random_permutation(5, rng))));
        CHECK_FALSE(are_isomorphic(families::petersen(), disjoint_union(c5, c5)));
        CHECK(canonical_form(Graph(0)).key == encode_graph6(Graph(0)));
    }

    TEST_CASE("classes on n <= 6 agree with brute-force isomorphism counts") {
        // number of unlabeled graphs on n vertices
        const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
        for (std::size_t n = 1; n <= 6; ++n) {
            const std::size_t pairs = n * (n - 1) / 2;
            std::set<std::string> keys;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                const Graph g = ts::graph_from_mask(n, mask);
                keys.insert(canonical_form(g).key);
            }
            CHECK(keys.size() == expected[n]);
        }
    }

    TEST_CASE("n = 4 keys separate exactly the brute-force classes") {
        std::vector<Graph> all;
        for (std::uint64_t mask = 0; mask < 64; ++mask) all.push_back(ts::graph_from_mask(4, mask));
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                const bool iso = ts::isomorphic_by_permutations(all[i], all[j]);
                REQUIRE((canonical_form(all[i]) == canonical_form(all[j])) == iso);
                REQUIRE(are_isomorphic(all[i], all[j]) == iso);
            }
        }
    }

    TEST_CASE("random 8-vertex pairs match factorial brute force") {
        std::mt19937_64 rng(8);
        int iso_seen = 0;
        for (int t = 0; t < 150; ++t) {
            const double p = 0.2 + 0.05 * (t % 10);
            const Graph a = ts::random_graph(8, p, rng);
            // odd trials perturb the relabeled copy by one edge
            Graph b = ts::permuted(a, ts::random_permutation(8, rng));
            if (t % 2 == 1) {
                const Vertex u = rng() % 8;
                Vertex v = rng() % 8;
                if (u == v) v = (v + 1) % 8;
                if (b.has_edge(u, v)) {
                    b.disconnect(u, v);
                } else {
                    b.connect(u, v);
                }
                // keep sizes equal so the size shortcut does not decide it
                for (Vertex x = 0; x < 8 && b.size() != a.size(); ++x) {
                    for (Vertex y = x + 1; y < 8 && b.size() != a.size(); ++y) {
                        if (VertexPair::of(x, y) == VertexPair::of(u, v)) continue;
                        if (b.size() > a.size() && b.has_edge(x, y)) b.disconnect(x, y);
                        else if (b.size() < a.size() && !b.has_edge(x, y)) b.connect(x, y);
                    }
                }
            }
            const bool iso = ts::isomorphic_by_permutations(a, b);
            iso_seen += iso;
            REQUIRE(are_isomorphic(a, b) == iso);
            REQUIRE((canonical_form(a) == canonical_form(b)) == iso);
        }
        CHECK(iso_seen >= 75);
        CHECK(iso_seen < 150);
    }

    TEST_CASE("permutation invariance on structured and random graphs") {
        std::mt19937_64 rng(30);
        std::vector<Graph> graphs{families::petersen(), families::hoffman_singleton(),
                                  families::cycle(30), Graph(12), families::star(9)};
        for (int t = 0; t < 60; ++t) graphs.push_back(ts::random_graph(1 + rng() % 30, 0.15, rng));
        for (const auto& g : graphs) {
            const auto key = canonical_form(g);
            for (int k = 0; k < 3; ++k) {
                const Graph h = ts::permuted(g, ts::random_permutation(g.order(), rng));
                REQUIRE(canonical_form(h) == key);
                REQUIRE(are_isomorphic(g, h));
            }
        }
    }

    TEST_CASE("regular graphs of equal parameters are told apart") {
        // C6 vs two triangles, C10 vs two C5, Petersen vs the 5-prism
        const Graph two_tri = disjoint_union(families::cycle(3), families::cycle(3));
        CHECK(canonical_form(families::cycle(6)) != canonical_form(two_tri));
        CHECK_FALSE(are_isomorphic(families::cycle(6), two_tri));
        const Graph two_c5 = disjoint_union(families::cycle(5), families::cycle(5));
        CHECK(canonical_form(families::cycle(10)) != canonical_form(two_c5));
        Graph prism = disjoint_union(families::cycle(5), families::cycle(5));
        for (Vertex i = 0; i < 5; ++i) prism.connect(i, i + 5);
        CHECK(canonical_form(prism) != canonical_form(families::petersen()));
        CHECK_FALSE(are_isomorphic(prism, families::petersen()));
    }
}
