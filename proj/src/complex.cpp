#include "gor/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "gor/indsets.hpp"

namespace gor {

int SimplicialComplex::dim() const {
    int d = -1;
    for (VertexSet f : facets) d = std::max(d, set_size(f) - 1);
    return d;
}

SimplicialComplex make_complex(int ground, std::vector<VertexSet> faces) {
    if (faces.empty()) faces.push_back(0);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> facets;
    for (VertexSet f : faces) {
        if (f & ~full_set(ground))
            throw std::invalid_argument("face outside ground set");
        bool maximal = true;
        for (VertexSet other : faces)
            if (other != f && (f & other) == f) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(f);
    }
    return SimplicialComplex{ground, std::move(facets)};
}

bool is_face(const SimplicialComplex& c, VertexSet f) {
    for (VertexSet facet : c.facets)
        if ((f & facet) == f) return true;
    return false;
}

SimplicialComplex independence_complex(const Graph& g) {
    check_vertex_cap(g.order());
    std::vector<VertexSet> facets;
    for (VertexSet a : independent_sets(g))
        if (closed_neighborhood(g, a) == g.vertices()) facets.push_back(a);
    if (facets.empty()) facets.push_back(0);  // zero-vertex graph
    std::sort(facets.begin(), facets.end());
    return SimplicialComplex{g.order(), std::move(facets)};
}

SimplicialComplex link(const SimplicialComplex& c, VertexSet f) {
    if (!is_face(c, f)) throw std::invalid_argument("link of a non-face");
    std::vector<VertexSet> faces;
    for (VertexSet facet : c.facets)
        if ((f & facet) == f) faces.push_back(facet & ~f);
    return make_complex(c.ground, std::move(faces));
}

std::vector<std::vector<VertexSet>> faces_by_card(const SimplicialComplex& c) {
    std::vector<VertexSet> all;
    for (VertexSet facet : c.facets) {
        // enumerate subsets of the facet
        VertexSet sub = facet;
        for (;;) {
            all.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    int maxcard = c.dim() + 1;
    std::vector<std::vector<VertexSet>> out(maxcard + 1);
    for (VertexSet f : all) out[set_size(f)].push_back(f);
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

}  // namespace gor
