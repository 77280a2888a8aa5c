#pragma once

#include <cstddef>

#include "girth5/graph.hpp"

namespace girth5::families {

Graph empty(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,leaves}; the center is vertex 0.
Graph star(std::size_t leaves);
Graph petersen();
/// Robertson's pentagon/pentagram construction: 50 vertices, 7-regular, girth 5.
Graph hoffman_singleton();

}  // namespace girth5::families
