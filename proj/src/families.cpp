#include "girth5/families.hpp"

namespace girth5::families {

Graph empty(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.connect(v - 1, v);
    return g;
}

Graph cycle(std::size_t n) {
    Graph g = path(n);
    if (n >= 3) g.connect(0, static_cast<Vertex>(n - 1));
    return g;
}

Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.connect(0, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.connect(i, (i + 1) % 5);
        g.connect(5 + i, 5 + (i + 2) % 5);
        g.connect(i, 5 + i);
    }
    return g;
}

Graph hoffman_singleton() {
    // P(h,i) = 5h + i, Q(j,k) = 25 + 5j + k
    Graph g(50);
    auto p = [](Vertex h, Vertex i) { return 5 * h + i; };
    auto q = [](Vertex j, Vertex k) { return 25 + 5 * j + k; };
    for (Vertex a = 0; a < 5; ++a) {
        for (Vertex b = 0; b < 5; ++b) {
            g.connect(p(a, b), p(a, (b + 1) % 5));
            g.connect(q(a, b), q(a, (b + 2) % 5));
        }
    }
    for (Vertex h = 0; h < 5; ++h) {
        for (Vertex j = 0; j < 5; ++j) {
            for (Vertex i = 0; i < 5; ++i) g.connect(p(h, i), q(j, (h * j + i) % 5));
        }
    }
    return g;
}

}  // namespace girth5::families
