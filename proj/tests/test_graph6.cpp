#include <random>
#include <string>

#include "doctest.h"
#include "girth5/errors.hpp"
#include "girth5/families.hpp"
#include "girth5/graph6.hpp"
#include "graph6_vectors.hpp"
#include "oracles.hpp"

using namespace girth5;
namespace ts = testsupport;

TEST_SUITE("graph6") {
    TEST_CASE("fixed vectors encode and decode byte for byte") {
        for (const auto& vec : ts::graph6_vectors()) {
            CAPTURE(vec.name);
            Graph g(vec.order);
            for (const auto& [u, v] : vec.edges) g.connect(u, v);
            CHECK(encode_graph6(g) == vec.graph6);
            CHECK(ts::graph6_by_bits(g) == vec.graph6);
            CHECK(decode_graph6(vec.graph6) == g);
        }
    }

    TEST_CASE("examples") {
        CHECK(encode_graph6(Graph(1)) == "@");
        CHECK(decode_graph6("@") == Graph(1));
        const Graph pet = families::petersen();
        CHECK(decode_graph6(encode_graph6(pet)) == pet);
        CHECK_THROWS_AS(decode_graph6("D>c"), ParseError);
    }

    TEST_CASE("header and one trailing newline are accepted") {
        const Graph c5 = families::cycle(5);
        CHECK(decode_graph6(">>graph6<<Dhc") == c5);
        CHECK(decode_graph6("Dhc\n") == c5);
        CHECK(decode_graph6(">>graph6<<Dhc\n") == c5);
        CHECK_THROWS_AS(decode_graph6("Dhc\n\n"), ParseError);
    }

    TEST_CASE("malformed strings are rejected") {
        CHECK_THROWS_AS(decode_graph6(""), ParseError);
        CHECK_THROWS_AS(decode_graph6("Dh"), ParseError);       // short body
        CHECK_THROWS_AS(decode_graph6("Dhcc"), ParseError);     // trailing byte
        CHECK_THROWS_AS(decode_graph6("Bh"), ParseError);       // padding bit set
        CHECK_THROWS_AS(decode_graph6("~??C"), ParseError);     // 4-byte form for n = 4
        CHECK_THROWS_AS(decode_graph6("~?"), ParseError);       // truncated order
        CHECK_THROWS_AS(decode_graph6("~~??????"), ParseError); // 8-byte form for small n
        CHECK_THROWS_AS(decode_graph6("D\x7f" "c"), ParseError);
        try {
            decode_graph6("Dh ");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 2);
        }
    }

    TEST_CASE("63/64 order boundary") {
        CHECK(encode_graph6(Graph(62)).front() == static_cast<char>(62 + 63));
        const std::string s63 = encode_graph6(Graph(63));
        CHECK(s63.substr(0, 4) == "~??~");
        CHECK(decode_graph6(s63) == Graph(63));
        CHECK(encode_graph6(Graph(0)) == "?");
        CHECK(decode_graph6("?") == Graph(0));
    }

    TEST_CASE("random round trips against the bit-level encoder") {
        std::mt19937_64 rng(6);
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = 1 + rng() % 70;
            const Graph g = ts::random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng);
            const std::string s = encode_graph6(g);
            REQUIRE(s == ts::graph6_by_bits(g));
            REQUIRE(decode_graph6(s) == g);
        }
    }

    TEST_CASE("random bytes never crash the decoder") {
        std::mt19937_64 rng(60);
        int accepted = 0;
        for (int t = 0; t < 20000; ++t) {
            std::string s(rng() % 24, '\0');
            for (auto& c : s) c = static_cast<char>(t % 2 ? 63 + rng() % 64 : rng() % 256);
            try {
                const Graph g = decode_graph6(s);
                ++accepted;
                // whatever parses must re-encode to itself, modulo header/newline
                std::string body = s;
                if (body.rfind(">>graph6<<", 0) == 0) body = body.substr(10);
                if (!body.empty() && body.back() == '\n') body.pop_back();
                REQUIRE(encode_graph6(g) == body);
            } catch (const ParseError&) {
            } catch (const CapacityError&) {
            }
        }
        CHECK(accepted > 0);
    }
}
