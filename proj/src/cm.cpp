#include "gor/cm.hpp"

#include <algorithm>
#include <set>

namespace gor {

namespace {

std::vector<VertexSet> adjacency_key(const Graph& g) {
    std::vector<VertexSet> key(g.order());
    for (int v = 0; v < g.order(); ++v) key[v] = g.neighbors(v);
    return key;
}

}  // namespace

const HomologyProfile& HomologyCache::profile(const Graph& connected) {
    auto key = adjacency_key(connected);
    {
        std::lock_guard lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    HomologyProfile p = homology(independence_complex(connected));
    std::lock_guard lock(mutex_);
    return memo_.emplace(std::move(key), std::move(p)).first->second;
}

HomologyCache& global_homology_cache() {
    static HomologyCache cache;
    return cache;
}

namespace {

// Field ranks of a complex, indexed by cardinality (index t = dim t-1).
std::vector<long> rank_vector(const HomologyProfile& p, long characteristic) {
    std::vector<long> out(p.dim + 2, 0);
    for (int t = 0; t <= p.dim + 1; ++t)
        out[t] = characteristic == 0 ? p.betti_q(t - 1)
                                     : p.betti_over(t - 1, characteristic);
    return out;
}

std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Reduced homology of the independence complex of h (a join over the
// components of h) vanishes below its dimension over characteristic c?
// Returns the failing dimension, or nullopt.
std::optional<int> link_failure(const std::vector<const HomologyProfile*>& comps,
                                long characteristic) {
    int join_dim = -1;
    for (const auto* p : comps) join_dim += p->dim + 1;
    std::vector<long> ranks{1};  // the empty-face complex
    for (const auto* p : comps)
        ranks = convolve(ranks, rank_vector(*p, characteristic));
    for (int t = 0; t <= join_dim; ++t)  // dims -1 .. join_dim-1
        if (t < static_cast<int>(ranks.size()) && ranks[t] != 0) return t - 1;
    return std::nullopt;
}

}  // namespace

CmResult is_cm(const Graph& g, const CharSpec& k, HomologyCache& cache) {
    check_vertex_cap(g.order());
    for (VertexSet f : independent_sets(g)) {
        auto sub = private_subgraph(g, f);
        std::vector<const HomologyProfile*> comps;
        for (VertexSet cv : components(sub.graph))
            comps.push_back(&cache.profile(induced_subgraph(sub.graph, cv).graph));

        std::set<long> chars;
        if (k.every_field) {
            chars.insert(0);
            for (const auto* p : comps)
                for (long q : p->torsion_primes()) chars.insert(q);
        } else {
            chars.insert(k.characteristic);
        }
        for (long c : chars)
            if (auto fail = link_failure(comps, c))
                return {false, std::make_pair(f, *fail)};
    }
    return {true, std::nullopt};
}

CmResult is_cm(const Graph& g, const CharSpec& k) {
    return is_cm(g, k, global_homology_cache());
}

}  // namespace gor
