#include "girth5/graph6.hpp"

#include <cstdint>

#include "girth5/errors.hpp"

namespace girth5 {

namespace {

constexpr std::size_t kLongOrderLimit = 258047;

std::size_t body_length(std::size_t n) { return (n * (n > 0 ? n - 1 : 0) / 2 + 5) / 6; }

}  // namespace

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kLongOrderLimit) throw CapacityError("order too large for graph6");
    std::string out;
    out.reserve(4 + body_length(n));
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        const auto row = g.row(static_cast<Vertex>(j));
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (test_bit(row, i) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header)) {
        text.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string", base);

    auto value = [&](std::size_t i) -> unsigned {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", base + i);
        return c - 63u;
    };

    std::size_t n = 0;
    std::size_t pos = 0;
    if (value(0) < 63) {
        n = value(0);
        pos = 1;
    } else {
        if (text.size() < 2) throw ParseError("truncated order field", base + text.size());
        if (value(1) == 63) {
            if (text.size() < 8) throw ParseError("truncated order field", base + text.size());
            std::uint64_t big = 0;
            for (std::size_t i = 2; i < 8; ++i) big = (big << 6) | value(i);
            if (big <= kLongOrderLimit) throw ParseError("non-minimal order field", base);
            throw CapacityError("graph6 order " + std::to_string(big) + " exceeds maximum " +
                                std::to_string(kMaxOrder));
        }
        if (text.size() < 4) throw ParseError("truncated order field", base + text.size());
        n = (std::size_t{value(1)} << 12) | (std::size_t{value(2)} << 6) | value(3);
        if (n <= 62) throw ParseError("non-minimal order field", base);
        pos = 4;
    }
    if (n > kMaxOrder) {
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds maximum " +
                            std::to_string(kMaxOrder));
    }
    const std::size_t expected = body_length(n);
    if (text.size() - pos < expected) {
        throw ParseError("body too short for order " + std::to_string(n), base + text.size());
    }
    if (text.size() - pos > expected) {
        throw ParseError("trailing bytes after graph6 body", base + pos + expected);
    }

    Graph g(n);
    std::size_t bit = 0;
    const std::size_t total = n * (n > 0 ? n - 1 : 0) / 2;
    std::size_t i = 0;
    std::size_t j = 1;
    for (std::size_t b = 0; b < expected; ++b) {
        const unsigned chunk = value(pos + b);
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (chunk >> k) & 1u;
            if (bit >= total) {
                if (set) throw ParseError("nonzero padding bits", base + pos + b);
                continue;
            }
            if (set) g.connect(static_cast<Vertex>(i), static_cast<Vertex>(j));
            if (++i == j) {
                ++j;
                i = 0;
            }
        }
    }
    return g;
}

}  // namespace girth5
