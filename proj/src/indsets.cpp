#include "gor/indsets.hpp"

#include <algorithm>

namespace gor {

bool is_independent(const Graph& g, VertexSet s) {
    for (VertexSet rest = s; rest;) {
        int v = first_vertex(rest);
        rest &= rest - 1;
        if (g.neighbors(v) & s) return false;
    }
    return true;
}

namespace {

void enumerate_rec(const Graph& g, VertexSet current, VertexSet candidates,
                   std::vector<VertexSet>& out) {
    out.push_back(current);
    while (candidates) {
        int v = first_vertex(candidates);
        candidates &= candidates - 1;
        // branch on v: candidates above v, minus N[v]
        VertexSet next = candidates & ~g.neighbors(v);
        enumerate_rec(g, current | bit(v), next, out);
    }
}

}  // namespace

std::vector<VertexSet> independent_sets(const Graph& g) {
    check_vertex_cap(g.order());
    std::vector<VertexSet> out;
    enumerate_rec(g, 0, g.vertices(), out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt IndependenceSummary::independence_poly_at_minus_one() const {
    BigInt sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        sum += (i % 2 == 0) ? coeffs[i] : -coeffs[i];
    return sum;
}

IndependenceSummary independence_summary(const Graph& g) {
    IndependenceSummary s;
    s.coeffs.assign(1, 0);
    for (VertexSet a : independent_sets(g)) {
        int size = set_size(a);
        if (size >= static_cast<int>(s.coeffs.size()))
            s.coeffs.resize(size + 1, 0);
        ++s.coeffs[size];
        // a is maximal iff no vertex outside N[a] can be added
        if (closed_neighborhood(g, a) == g.vertices())
            s.maximal_sizes.insert(size);
    }
    s.alpha = static_cast<int>(s.coeffs.size()) - 1;
    return s;
}

bool euler_condition(const IndependenceSummary& s) {
    return s.independence_poly_at_minus_one() == (s.alpha % 2 == 0 ? 1 : -1);
}

bool euler_condition(const Graph& g) {
    return euler_condition(independence_summary(g));
}

bool is_well_covered(const IndependenceSummary& s) {
    return s.maximal_sizes.size() == 1 && *s.maximal_sizes.begin() == s.alpha;
}

bool is_well_covered(const Graph& g) {
    return is_well_covered(independence_summary(g));
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
    std::vector<VertexSet> all = independent_sets(g);
    int alpha = 0;
    for (VertexSet a : all) alpha = std::max(alpha, set_size(a));
    std::vector<VertexSet> out;
    for (VertexSet a : all)
        if (set_size(a) == alpha) out.push_back(a);
    return out;
}

namespace {

// Bitset over maximum-independent-set indices.
using MisBits = std::vector<std::uint64_t>;

bool bits_intersect(const MisBits& x, const MisBits& y) {
    for (std::size_t w = 0; w < x.size(); ++w)
        if (x[w] & y[w]) return true;
    return false;
}

}  // namespace

W2Certificate is_w2(const Graph& g) {
    check_vertex_cap(g.order());
    W2Certificate cert;
    if (g.order() < 2) {
        cert.failure = W2Certificate::Failure::DegenerateInput;
        return cert;
    }
    std::vector<VertexSet> ind = independent_sets(g);  // sorted by mask
    std::vector<VertexSet> mis = maximum_independent_sets(g);
    std::size_t m = mis.size();
    std::size_t words = (m + 63) / 64;

    // disjoint[i]: which maximum independent sets are disjoint from mis[i]
    std::vector<MisBits> disjoint(m, MisBits(words, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!(mis[i] & mis[j])) disjoint[i][j / 64] |= 1ull << (j % 64);

    // covered[k]: which maximum independent sets contain ind[k]
    std::vector<MisBits> covered(ind.size(), MisBits(words, 0));
    for (std::size_t k = 0; k < ind.size(); ++k)
        for (std::size_t j = 0; j < m; ++j)
            if ((ind[k] & mis[j]) == ind[k]) covered[k][j / 64] |= 1ull << (j % 64);

    auto extendable = [&](std::size_t i, std::size_t j) {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = covered[i][w];
            while (bits) {
                std::size_t mi = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (bits_intersect(disjoint[mi], covered[j])) return true;
            }
        }
        return false;
    };

    // unordered pairs of disjoint independent sets; (0,0) is the empty pair
    for (std::size_t i = 0; i < ind.size(); ++i) {
        for (std::size_t j = i; j < ind.size(); ++j) {
            if (i == j && ind[i] != 0) continue;
            if (ind[i] & ind[j]) continue;
            if (!extendable(i, j)) {
                cert.failure = W2Certificate::Failure::Pair;
                cert.a1 = ind[i];
                cert.a2 = ind[j];
                return cert;
            }
        }
    }
    cert.verdict = true;
    return cert;
}

std::optional<LemmaWitness> w2_lemma_witness(const Graph& g) {
    for (VertexSet b : independent_sets(g)) {
        if (b == 0) continue;
        for (int v : set_members(b)) {
            bool ok = true;
            for (int x : set_members(g.neighbors(v))) {
                if (!(b & g.neighbors(x) & ~bit(v))) {
                    ok = false;
                    break;
                }
            }
            if (ok) return LemmaWitness{b, v};
        }
    }
    return std::nullopt;
}

}  // namespace gor
