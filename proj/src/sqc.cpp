#include "gor/sqc.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

#include "gor/indsets.hpp"

namespace gor {

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out = 0;
    for (int v = 0; v < g.order(); ++v) {
        bool clique = true;
        for (int u : set_members(g.neighbors(v)))
            if ((g.neighbors(v) & ~bit(u)) & ~g.neighbors(u)) {
                clique = false;
                break;
            }
        if (clique) out |= bit(v);
    }
    return out;
}

namespace {

// All cycles on k distinct vertices, canonical: least vertex first,
// second element smaller than last (kills rotation and reflection).
template <int K>
std::vector<std::array<int, K>> cycles_of_length(const Graph& g) {
    std::vector<std::array<int, K>> out;
    std::array<int, K> path{};
    auto extend = [&](auto&& self, int depth, VertexSet used) -> void {
        if (depth == K) {
            if (g.adjacent(path[K - 1], path[0]) && path[1] < path[K - 1])
                out.push_back(path);
            return;
        }
        for (int v : set_members(g.neighbors(path[depth - 1]) & ~used))
            if (v > path[0]) {
                path[depth] = v;
                self(self, depth + 1, used | bit(v));
            }
    };
    for (int v0 = 0; v0 < g.order(); ++v0) {
        path[0] = v0;
        extend(extend, 1, bit(v0));
    }
    return out;
}

bool no_adjacent_high_degree(const Graph& g, VertexSet cycle_verts) {
    for (int u : set_members(cycle_verts)) {
        if (g.degree(u) <= 2) continue;
        for (int w : set_members(g.neighbors(u) & cycle_verts))
            if (g.degree(w) > 2) return false;
    }
    return true;
}

VertexSet to_mask(std::span<const int> verts) {
    VertexSet s = 0;
    for (int v : verts) s |= bit(v);
    return s;
}

}  // namespace

std::vector<std::array<int, 5>> basic_five_cycles(const Graph& g) {
    std::vector<std::array<int, 5>> out;
    for (const auto& c : cycles_of_length<5>(g))
        if (no_adjacent_high_degree(g, to_mask(c))) out.push_back(c);
    return out;
}

std::vector<BasicFourCycle> basic_four_cycles(const Graph& g) {
    VertexSet simp = simplicial_vertices(g);
    VertexSet in_simplex = 0;
    for (int v : set_members(simp)) in_simplex |= closed_neighborhood(g, bit(v));
    VertexSet on_basic_five = 0;
    for (const auto& c : basic_five_cycles(g)) on_basic_five |= to_mask(c);

    std::vector<BasicFourCycle> out;
    for (const auto& c : cycles_of_length<4>(g)) {
        VertexSet cset = to_mask(c);
        for (int e = 0; e < 4; ++e) {
            int u = c[e], w = c[(e + 1) % 4];
            if (g.degree(u) != 2 || g.degree(w) != 2) continue;
            VertexSet others = cset & ~bit(u) & ~bit(w);
            if ((others & ~(in_simplex | on_basic_five)) == 0)
                out.push_back({c, bit(u) | bit(w)});
        }
    }
    return out;
}

namespace {

struct Candidate {
    VertexSet verts;
    int type;  // 0 simplex, 1 five-cycle, 2 basic pair
    std::size_t index;
};

bool search_cover(const std::vector<Candidate>& cands, VertexSet uncovered,
                  std::vector<std::size_t>& chosen) {
    if (uncovered == 0) return true;
    // most-constrained uncovered vertex
    int best_v = -1;
    std::size_t best_count = SIZE_MAX;
    for (int v : set_members(uncovered)) {
        std::size_t count = 0;
        for (const auto& c : cands)
            if (contains(c.verts, v) && (c.verts & ~uncovered) == 0) ++count;
        if (count < best_count) {
            best_count = count;
            best_v = v;
        }
        if (count == 0) return false;
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto& c = cands[i];
        if (!contains(c.verts, best_v) || (c.verts & ~uncovered)) continue;
        chosen.push_back(i);
        if (search_cover(cands, uncovered & ~c.verts, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<SqcPartition> find_sqc_partition(const Graph& g) {
    check_vertex_cap(g.order());

    std::vector<VertexSet> simplices;
    for (int v : set_members(simplicial_vertices(g))) {
        VertexSet s = closed_neighborhood(g, bit(v));
        if (std::find(simplices.begin(), simplices.end(), s) == simplices.end())
            simplices.push_back(s);
    }
    auto fives = basic_five_cycles(g);
    auto fours = basic_four_cycles(g);

    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        cands.push_back({simplices[i], 0, i});
    for (std::size_t i = 0; i < fives.size(); ++i)
        cands.push_back({to_mask(fives[i]), 1, i});
    for (std::size_t i = 0; i < fours.size(); ++i) {
        // distinct 4-cycles may offer the same basic pair
        bool dup = false;
        for (const auto& c : cands)
            if (c.type == 2 && c.verts == fours[i].basics) dup = true;
        if (!dup) cands.push_back({fours[i].basics, 2, i});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        int vx = x.verts ? first_vertex(x.verts) : -1;
        int vy = y.verts ? first_vertex(y.verts) : -1;
        return std::tie(vx, x.type, x.verts) < std::tie(vy, y.type, y.verts);
    });

    std::vector<std::size_t> chosen;
    if (!search_cover(cands, g.vertices(), chosen)) return std::nullopt;

    SqcPartition p;
    for (std::size_t i : chosen) {
        const auto& c = cands[i];
        if (c.type == 0) p.simplices.push_back(c.verts);
        else if (c.type == 1) p.five_cycles.push_back(fives[c.index]);
        else p.four_cycle_basics.push_back(fours[c.index]);
    }
    if (!validate_sqc_partition(g, p))
        throw std::logic_error("sqc search produced an invalid partition");
    return p;
}

bool validate_sqc_partition(const Graph& g, const SqcPartition& p) {
    // disjointness and exact cover
    VertexSet covered = 0;
    auto add = [&](VertexSet part) {
        if (covered & part) return false;
        covered |= part;
        return true;
    };
    for (VertexSet s : p.simplices)
        if (!add(s)) return false;
    for (const auto& c : p.five_cycles)
        if (!add(to_mask(c))) return false;
    for (const auto& q : p.four_cycle_basics)
        if (!add(q.basics)) return false;
    if (covered != g.vertices()) return false;

    // each simplex is the closed neighborhood of some simplicial vertex
    VertexSet simp = simplicial_vertices(g);
    for (VertexSet s : p.simplices) {
        bool found = false;
        for (int v : set_members(simp & s))
            if (closed_neighborhood(g, bit(v)) == s) found = true;
        if (!found) return false;
    }
    // listed cycles must actually be basic cycles of g
    auto fives = basic_five_cycles(g);
    for (const auto& c : p.five_cycles)
        if (std::find(fives.begin(), fives.end(), c) == fives.end()) return false;
    auto fours = basic_four_cycles(g);
    for (const auto& q : p.four_cycle_basics)
        if (std::find(fours.begin(), fours.end(), q) == fours.end()) return false;

    // alpha = m + 2t + r
    if (g.order() > 0) {
        auto summary = independence_summary(g);
        long expect = static_cast<long>(p.simplices.size()) +
                      2 * static_cast<long>(p.five_cycles.size()) +
                      static_cast<long>(p.four_cycle_basics.size());
        if (summary.alpha != expect) return false;
    }
    return true;
}

bool sqc_gorenstein(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("sqc_gorenstein: empty graph");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("sqc_gorenstein: isolated vertex");
    if (!find_sqc_partition(g))
        throw std::invalid_argument("sqc_gorenstein: graph is not SQC");
    for (VertexSet comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        bool edge = sub.graph.order() == 2;
        bool five = is_cycle_graph(sub.graph) == std::optional<int>(5);
        if (!edge && !five) return false;
    }
    return true;
}

nlohmann::json sqc_partition_to_json(const SqcPartition& p) {
    nlohmann::json j;
    j["simplices"] = nlohmann::json::array();
    for (VertexSet s : p.simplices) j["simplices"].push_back(set_members(s));
    j["fiveCycles"] = nlohmann::json::array();
    for (const auto& c : p.five_cycles) j["fiveCycles"].push_back(c);
    j["fourCycleBasics"] = nlohmann::json::array();
    for (const auto& q : p.four_cycle_basics)
        j["fourCycleBasics"].push_back(
            {{"cycle", q.cycle}, {"basics", set_members(q.basics)}});
    return j;
}

}  // namespace gor
