#ifndef GOR_GRAPH_HPP
#define GOR_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gor/config.hpp"

namespace gor {

// Vertex subsets of [0, n) as bit masks.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet full_set(int n) {
    return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

// Lowest vertex of a nonempty set.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

// Vertices of s in increasing order.
std::vector<int> set_members(VertexSet s);

struct CirculantSpec {
    int n = 0;
    std::vector<int> connections;  // subset of {1, ..., floor(n/2)}
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const std::pair<int, int>> edges);

    // Takes ownership of an adjacency table; validates symmetry,
    // irreflexivity and range.
    static Graph from_adjacency(std::vector<VertexSet> adj);

    int order() const { return n_; }
    VertexSet vertices() const { return full_set(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return contains(adj_[u], v); }
    int degree(int v) const { return set_size(adj_[v]); }
    int edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

Graph circulant(const CirculantSpec& spec);
Graph complement(const Graph& g);

// N[F]: F together with every vertex adjacent to F.
VertexSet closed_neighborhood(const Graph& g, VertexSet f);

// Induced subgraph with the map back to original labels:
// original[i] is the parent-graph label of vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);

// G_F: the subgraph induced on V(G) \ N[F].
InducedSubgraph private_subgraph(const Graph& g, VertexSet f);

// Connected components as vertex sets, sorted by least vertex.
std::vector<VertexSet> components(const Graph& g);

// k iff g is a connected 2-regular graph on k >= 3 vertices.
std::optional<int> is_cycle_graph(const Graph& g);
std::optional<int> is_complement_of_cycle(const Graph& g);

bool is_triangle_free(const Graph& g);

// Degrees in nondecreasing order.
std::vector<int> degree_sequence(const Graph& g);

}  // namespace gor

#endif
