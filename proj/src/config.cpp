#include "gor/config.hpp"

namespace gor {

namespace {
int g_vertex_cap = 24;
}

int vertex_cap() { return g_vertex_cap; }

void set_vertex_cap(int cap) {
    if (cap < 1 || cap > kMaxVertices)
        throw std::invalid_argument("vertex cap must be in [1, " +
                                    std::to_string(kMaxVertices) + "]");
    g_vertex_cap = cap;
}

void check_vertex_cap(int n) {
    if (n > g_vertex_cap)
        throw CapExceeded("graph has " + std::to_string(n) +
                          " vertices, cap is " + std::to_string(g_vertex_cap));
}

}  // namespace gor
