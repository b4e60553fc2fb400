#ifndef GOR_COMPLEX_HPP
#define GOR_COMPLEX_HPP

#include <vector>

#include "gor/graph.hpp"

namespace gor {

// A simplicial complex given by its facets (maximal faces).  The complex
// {empty face} is represented by a single facet 0; ground may exceed the
// vertices actually used.
struct SimplicialComplex {
    int ground = 0;
    std::vector<VertexSet> facets;  // pairwise non-contained, sorted by mask

    int dim() const;  // -1 for the empty-face complex

    bool operator==(const SimplicialComplex&) const = default;
};

// Builds a complex from arbitrary generating faces, pruning to facets.
SimplicialComplex make_complex(int ground, std::vector<VertexSet> faces);

bool is_face(const SimplicialComplex& c, VertexSet f);

// Facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

// link_c(f) = { a \ f : f subset a in c }; throws if f is not a face.
SimplicialComplex link(const SimplicialComplex& c, VertexSet f);

// All faces grouped by cardinality: result[k] lists the k-element faces
// sorted by mask; result[0] = {empty face}.
std::vector<std::vector<VertexSet>> faces_by_card(const SimplicialComplex& c);

}  // namespace gor

#endif
