// End-to-end acceptance suite: re-derives every classification theorem by
// brute force and cross-checks the closed-form rules, printing one
// pass/fail line per criterion.
#include <chrono>
#include <cstdio>
#include <random>
#include <thread>
#include <vector>

#include "gor/circulant.hpp"
#include "gor/io.hpp"
#include "gor/sqc.hpp"

using namespace gor;

namespace {

using Edges = std::vector<std::pair<int, int>>;

int g_failures = 0;

void report(int idx, const char* name, bool ok, double millis) {
    std::printf("criterion %d (%s): %s  [%.0f ms]\n", idx, name,
                ok ? "PASS" : "FAIL", millis);
    if (!ok) ++g_failures;
}

template <typename F>
void run(int idx, const char* name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("criterion %d: exception: %s\n", idx, e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    report(idx, name, ok, ms);
}

int jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 2;
}

Graph cycle(int n) { return circulant({n, {1}}); }

Graph complete(int n) {
    Edges edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path(int n) {
    Edges edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Edges edges;
    for (int u = 0; u < a.order(); ++u)
        for (int v : set_members(a.neighbors(u)))
            if (v > u) edges.emplace_back(u, v);
    for (int u = 0; u < b.order(); ++u)
        for (int v : set_members(b.neighbors(u)))
            if (v > u) edges.emplace_back(a.order() + u, a.order() + v);
    return Graph(a.order() + b.order(), edges);
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Edges edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool whole_w2(const Graph& g) {
    for (VertexSet comp : components(g))
        if (!is_w2(induced_subgraph(g, comp).graph).verdict) return false;
    return g.order() >= 2;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : set_members(g.neighbors(u))) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// --- criterion bodies -------------------------------------------------

bool band_family() {
    SurveyOptions opts;
    opts.max_n = 18;
    opts.jobs = jobs();
    auto rows = survey(SurveyFamily::Band, opts);
    for (const auto& r : rows)
        if (r.skipped) return false;
    return !rows.empty() && survey_all_match(rows);
}

bool cubic_family() {
    SurveyOptions opts;
    opts.max_n = 18;
    opts.jobs = jobs();
    auto rows = survey(SurveyFamily::Cubic, opts);
    if (rows.empty() || !survey_all_match(rows)) return false;
    // Gorenstein cubics decompose into complements of 6-cycles.
    for (long m = 4; m <= 18; m += 2)
        for (long a = 1; 2 * a < m; ++a) {
            if (!classify_cubic(m, a)) continue;
            Graph g = circulant({static_cast<int>(m),
                                 {static_cast<int>(a), static_cast<int>(m / 2)}});
            for (VertexSet comp : components(g)) {
                auto sub = induced_subgraph(g, comp);
                if (is_complement_of_cycle(sub.graph) != 6) return false;
            }
        }
    return true;
}

bool quartic_family() {
    SurveyOptions opts;
    opts.max_n = 14;
    opts.jobs = jobs();
    auto rows = survey(SurveyFamily::Quartic, opts);
    if (rows.empty() || !survey_all_match(rows)) return false;

    // sporadic witnesses, re-derived directly from the engine
    struct Named {
        int n, a, b;
        QuarticVerdict expect;
    };
    const Named named[] = {
        {13, 2, 3, QuarticVerdict::Gorenstein},
        {13, 1, 5, QuarticVerdict::Gorenstein},
        {13, 4, 6, QuarticVerdict::Gorenstein},
        {7, 1, 2, QuarticVerdict::Gorenstein},
        {5, 1, 2, QuarticVerdict::W2Only},
        {8, 1, 2, QuarticVerdict::W2Only},
        {14, 1, 4, QuarticVerdict::Neither},
        {9, 1, 3, QuarticVerdict::Neither},
        {12, 2, 3, QuarticVerdict::Neither},
        {9, 3, 4, QuarticVerdict::Neither},
        {14, 5, 6, QuarticVerdict::Neither},
    };
    for (const auto& c : named) {
        Graph g = circulant({c.n, {c.a, c.b}});
        bool gor = is_gorenstein(g).gorenstein;
        bool w2 = whole_w2(g);
        QuarticVerdict actual = gor       ? QuarticVerdict::Gorenstein
                                : w2      ? QuarticVerdict::W2Only
                                          : QuarticVerdict::Neither;
        if (actual != c.expect) return false;
        if (classify_quartic(c.n, c.a, c.b) != c.expect) return false;
    }
    return true;
}

bool w2_window() {
    for (int n = 4; n <= 12; ++n) {
        bool expect = n == 4 || n == 5 || n == 7 || n == 8;
        if (is_w2(circulant({n, {1, 2}})).verdict != expect) return false;
    }
    // the lemma's boundary case once more, explicitly
    return !is_w2(circulant({11, {1, 2}})).verdict;
}

bool sqc_theorem() {
    struct Part {
        Graph graph;
        bool good;  // component is an edge or a plain 5-cycle
    };
    Graph c4p(6, Edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 5}});
    Graph bridged(10, Edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}, {0, 5}});
    Graph chord(5, Edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    const std::vector<Part> parts{
        {complete(2), true}, {cycle(5), true},   {path(4), false},
        {c4p, false},        {bridged, false},   {chord, false},
    };

    std::size_t checked = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j <= parts.size(); ++j)
            for (std::size_t k = j; k <= parts.size(); ++k) {
                // j or k == parts.size() means "no part in this slot"
                int total = parts[i].graph.order() +
                            (j < parts.size() ? parts[j].graph.order() : 0) +
                            (k < parts.size() ? parts[k].graph.order() : 0);
                if (total > 16) continue;
                Graph g = parts[i].graph;
                bool good = parts[i].good;
                if (j < parts.size()) {
                    g = disjoint_union(g, parts[j].graph);
                    good = good && parts[j].good;
                }
                if (k < parts.size()) {
                    g = disjoint_union(g, parts[k].graph);
                    good = good && parts[k].good;
                }
                if (!find_sqc_partition(g)) return false;  // corpus is all SQC
                bool rule = sqc_gorenstein(g);
                if (rule != is_gorenstein(g).gorenstein) return false;
                if (rule != good) return false;
                ++checked;
            }
    return checked >= 30;
}

bool homology_oracle() {
    auto pent = homology(independence_complex(cycle(5)));
    if (pent.betti_q(1) != 1 || pent.betti_q(0) != 0) return false;

    for (int n = 1; n <= 5; ++n) {
        auto full = homology(independence_complex(Graph(n, {})));
        for (int i = -1; i <= full.dim; ++i)
            if (full.betti_q(i) != 0 || !full.torsion(i).empty()) return false;
    }

    std::vector<VertexSet> tri{bit(0) | bit(1), bit(0) | bit(2), bit(1) | bit(2)};
    auto circle = homology(make_complex(3, tri));
    if (circle.betti_q(1) != 1 || circle.betti_q(0) != 0) return false;

    std::vector<VertexSet> rp2;
    for (auto t : {std::array<int, 3>{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                   {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5},
                   {2, 4, 5}}) {
        rp2.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
    }
    auto p = homology(make_complex(6, std::move(rp2)));
    return p.betti_q(1) == 0 && p.betti_over(1, 2) == 1 &&
           p.betti_over(1, 2) != p.betti_q(1);
}

bool check_identities(const Graph& g) {
    auto summary = independence_summary(g);
    auto delta = independence_complex(g);
    auto prof = homology(delta);

    // (a) I(G,-1) = -reduced Euler characteristic
    if (summary.independence_poly_at_minus_one() != -prof.reduced_euler())
        return false;

    // (b) link homology equals the private-subgraph complex homology
    for (VertexSet f : independent_sets(g)) {
        auto lk = homology(link(delta, f));
        auto sub = private_subgraph(g, f);
        auto direct = homology(independence_complex(sub.graph));
        int top = std::max(lk.dim, direct.dim);
        for (int i = -1; i <= top; ++i) {
            if (lk.betti_q(i) != direct.betti_q(i)) return false;
            if (lk.torsion(i) != direct.torsion(i)) return false;
        }
    }

    bool w2 = g.order() >= 2 && is_w2(g).verdict;

    // (c) a lemma witness forbids W2
    if (w2_lemma_witness(g) && w2) return false;

    // (d) Gorenstein implies W2 when there is no isolated vertex
    bool isolated = false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) isolated = true;
    if (g.order() >= 2 && !isolated && is_gorenstein(g).gorenstein && !w2)
        return false;

    // (e) W2 implies well-covered
    if (w2 && !is_well_covered(summary)) return false;

    // (f) connected, non-complete W2 graphs have minimum degree >= 2
    if (w2 && components(g).size() == 1 &&
        g.edge_count() != g.order() * (g.order() - 1) / 2 &&
        degree_sequence(g).front() < 2)
        return false;

    return true;
}

bool cross_identities() {
    // every circulant on at most 8 vertices
    for (int n = 3; n <= 8; ++n) {
        int half = n / 2;
        for (int mask = 1; mask < (1 << half); ++mask) {
            std::vector<int> conns;
            for (int d = 1; d <= half; ++d)
                if (mask & (1 << (d - 1))) conns.push_back(d);
            if (!check_identities(circulant({n, conns}))) return false;
        }
    }
    // 500 random graphs
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_real_distribution<double> density(0.25, 0.75);
    for (int trial = 0; trial < 500; ++trial)
        if (!check_identities(random_graph(size(rng), density(rng), rng)))
            return false;
    return true;
}

bool side_claims() {
    for (int n = 3; n <= 9; ++n)
        if (is_gorenstein(cycle(n)).gorenstein != (n == 5)) return false;
    for (int n = 1; n <= 6; ++n)
        if (is_gorenstein(complete(n)).gorenstein != (n <= 2)) return false;

    auto claim = [](const Graph& g) {
        bool is_k2 = g.order() == 2 && g.edge_count() == 1;
        bool is_k1 = g.order() == 1;
        return is_gorenstein(g).gorenstein == (is_k2 || is_k1);
    };

    // exhaustive over all labeled graphs on up to 6 vertices
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (long mask = 0; mask < (1L << pairs); ++mask) {
            Edges edges;
            int e = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++e)
                    if (mask & (1L << e)) edges.emplace_back(u, v);
            Graph g(n, edges);
            if (components(g).size() != 1 || !is_bipartite(g)) continue;
            if (!claim(g)) return false;
        }
    }

    // random connected bipartite corpus at n = 7, 8 (fixed seed)
    std::mt19937 rng(24680u);
    std::uniform_real_distribution<double> density(0.3, 0.8);
    int seen = 0;
    for (int trial = 0; trial < 2000 && seen < 300; ++trial) {
        int n = 7 + trial % 2;
        std::uniform_int_distribution<int> split(1, n - 1);
        int left = split(rng);
        std::bernoulli_distribution coin(density(rng));
        Edges edges;
        for (int u = 0; u < left; ++u)
            for (int v = left; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (components(g).size() != 1) continue;
        ++seen;
        if (!claim(g)) return false;
    }
    return seen >= 300;
}

}  // namespace

int main() {
    run(1, "band family n = 2d+3", band_family);
    run(2, "cubic family gcd rule", cubic_family);
    run(3, "quartic trichotomy", quartic_family);
    run(4, "C_n(1,2) W2 window", w2_window);
    run(5, "SQC edge-or-pentagon theorem", sqc_theorem);
    run(6, "homology oracle", homology_oracle);
    run(7, "cross-identity suite", cross_identities);
    run(8, "cycle, complete, bipartite side claims", side_claims);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
