#ifndef GOR_SQC_HPP
#define GOR_SQC_HPP

#include <array>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gor/graph.hpp"

namespace gor {

// Vertices whose closed neighborhood is a clique.
VertexSet simplicial_vertices(const Graph& g);

// 5-cycles of g (any cycle subgraph on 5 distinct vertices, chords
// allowed) with no edge of g joining two cycle vertices of degree > 2.
// Canonical order: least vertex first, lower second neighbor.
std::vector<std::array<int, 5>> basic_five_cycles(const Graph& g);

struct BasicFourCycle {
    std::array<int, 4> cycle{};
    VertexSet basics = 0;  // two adjacent degree-2 vertices

    bool operator==(const BasicFourCycle&) const = default;
};

// 4-cycles with an adjacent pair of degree-2 vertices whose two other
// vertices each lie in a simplex or on a basic 5-cycle.
std::vector<BasicFourCycle> basic_four_cycles(const Graph& g);

struct SqcPartition {
    std::vector<VertexSet> simplices;
    std::vector<std::array<int, 5>> five_cycles;
    std::vector<BasicFourCycle> four_cycle_basics;

    bool operator==(const SqcPartition&) const = default;
};

// Exact-cover search for a partition of V(G) into simplices, basic
// 5-cycle vertex sets, and basic pairs of basic 4-cycles.  The returned
// partition is re-validated against the definitions.
std::optional<SqcPartition> find_sqc_partition(const Graph& g);

// Independent re-check of every part-level invariant.
bool validate_sqc_partition(const Graph& g, const SqcPartition& p);

// Closed-form rule for SQC graphs: Gorenstein iff every component is an edge
// or a 5-cycle.  Requires no isolated vertex and SQC membership.
bool sqc_gorenstein(const Graph& g);

nlohmann::json sqc_partition_to_json(const SqcPartition& p);

}  // namespace gor

#endif
