#ifndef GOR_INDSETS_HPP
#define GOR_INDSETS_HPP

#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gor/graph.hpp"

namespace gor {

using BigInt = boost::multiprecision::cpp_int;

// All independent sets of g (including the empty set), sorted by mask value.
std::vector<VertexSet> independent_sets(const Graph& g);

bool is_independent(const Graph& g, VertexSet s);

struct IndependenceSummary {
    int alpha = 0;                 // independence number
    std::vector<BigInt> coeffs;    // coeffs[i] = # independent sets of size i
    std::set<int> maximal_sizes;   // sizes attained by maximal independent sets

    // I(G,-1) as the alternating coefficient sum.
    BigInt independence_poly_at_minus_one() const;
};

IndependenceSummary independence_summary(const Graph& g);

// I(G,-1) == (-1)^alpha.
bool euler_condition(const IndependenceSummary& s);
bool euler_condition(const Graph& g);

bool is_well_covered(const IndependenceSummary& s);
bool is_well_covered(const Graph& g);

std::vector<VertexSet> maximum_independent_sets(const Graph& g);

struct W2Certificate {
    enum class Failure { None, DegenerateInput, Pair };
    bool verdict = false;
    Failure failure = Failure::None;
    // Failing pair of disjoint independent sets, when failure == Pair.
    VertexSet a1 = 0, a2 = 0;

    bool operator==(const W2Certificate&) const = default;
};

// Exhaustive W2 decision: every pair of disjoint independent sets must
// extend to a pair of disjoint maximum independent sets.
W2Certificate is_w2(const Graph& g);

struct LemmaWitness {
    VertexSet b = 0;  // independent set
    int v = -1;       // member of b
};

// Searches for an independent set B and v in B such that every neighbor x
// of v has another B-neighbor besides v.  Such a witness rules out W2.
std::optional<LemmaWitness> w2_lemma_witness(const Graph& g);

}  // namespace gor

#endif
