#include "gor/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace gor {

std::vector<int> set_members(VertexSet s) {
    std::vector<int> out;
    out.reserve(set_size(s));
    while (s) {
        int v = first_vertex(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    check_vertex_cap(n);
    adj_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
    int n = static_cast<int>(adj.size());
    check_vertex_cap(n);
    VertexSet all = full_set(n);
    for (int v = 0; v < n; ++v) {
        if (adj[v] & ~all) throw std::invalid_argument("neighbor out of range");
        if (contains(adj[v], v)) throw std::invalid_argument("self-loop");
        for (int u : set_members(adj[v]))
            if (!contains(adj[u], v))
                throw std::invalid_argument("asymmetric adjacency");
    }
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(adj);
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

Graph circulant(const CirculantSpec& spec) {
    int n = spec.n;
    if (n < 1) throw std::invalid_argument("circulant needs n >= 1");
    check_vertex_cap(n);
    std::vector<bool> seen(n / 2 + 1, false);
    for (int s : spec.connections) {
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("connection " + std::to_string(s) +
                                        " outside [1, n/2]");
        if (seen[s]) throw std::invalid_argument("duplicate connection");
        seen[s] = true;
    }
    std::vector<VertexSet> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int diff = j - i;
            int dist = std::min(diff, n - diff);
            if (dist >= 1 && dist <= n / 2 && seen[dist]) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    return Graph::from_adjacency(std::move(adj));
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> adj(n);
    for (int v = 0; v < n; ++v)
        adj[v] = full_set(n) & ~g.neighbors(v) & ~bit(v);
    return Graph::from_adjacency(std::move(adj));
}

VertexSet closed_neighborhood(const Graph& g, VertexSet f) {
    VertexSet out = f;
    for (int v : set_members(f)) out |= g.neighbors(v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
    std::vector<int> original = set_members(w);
    int m = static_cast<int>(original.size());
    std::vector<int> newlabel(g.order(), -1);
    for (int i = 0; i < m; ++i) newlabel[original[i]] = i;
    std::vector<VertexSet> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int u : set_members(g.neighbors(original[i]) & w))
            adj[i] |= bit(newlabel[u]);
    return {Graph::from_adjacency(std::move(adj)), std::move(original)};
}

InducedSubgraph private_subgraph(const Graph& g, VertexSet f) {
    return induced_subgraph(g, g.vertices() & ~closed_neighborhood(g, f));
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet remaining = g.vertices();
    while (remaining) {
        VertexSet comp = bit(first_vertex(remaining));
        for (;;) {
            VertexSet grown = closed_neighborhood(g, comp);
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        remaining &= ~comp;
    }
    return out;
}

std::optional<int> is_cycle_graph(const Graph& g) {
    int n = g.order();
    if (n < 3) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return std::nullopt;
    if (components(g).size() != 1) return std::nullopt;
    return n;
}

std::optional<int> is_complement_of_cycle(const Graph& g) {
    return is_cycle_graph(complement(g));
}

bool is_triangle_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        for (int u : set_members(g.neighbors(v)))
            if (u > v && (g.neighbors(u) & g.neighbors(v))) return false;
    return true;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs(g.order());
    for (int v = 0; v < g.order(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace gor
