#ifndef GOR_GORENSTEIN_HPP
#define GOR_GORENSTEIN_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gor/cm.hpp"

namespace gor {

// Checks that the complement of G_F is a cycle of length >= 4 for every
// independent F of size alpha(G)-2.  Vacuous when alpha < 2.
struct LinkCycleCheck {
    bool ok = false;
    std::optional<VertexSet> witness;  // first failing F
};

LinkCycleCheck link_cycle_condition(const Graph& g);

enum class Shape { K1, K2, ComplementOfCycle, Other };

enum class DecisionPath { Trivial, AlphaTwo, TriangleFree, FullCriterion };

struct ComponentVerdict {
    std::vector<int> vertices;  // original labels
    Shape shape = Shape::Other;
    int cycle_length = 0;  // when shape == ComplementOfCycle
    std::optional<bool> well_covered;
    std::optional<W2Certificate> w2;
    std::optional<bool> cm;
    std::optional<std::pair<VertexSet, int>> cm_witness;  // in component labels
    std::optional<bool> euler_ok;
    std::optional<bool> link_condition_ok;
    std::optional<VertexSet> link_witness;  // in component labels
    bool gorenstein = false;
    DecisionPath path = DecisionPath::FullCriterion;

    bool operator==(const ComponentVerdict&) const = default;
};

struct Verdict {
    CharSpec field;
    std::vector<ComponentVerdict> components;
    bool gorenstein = false;

    bool operator==(const Verdict&) const = default;
};

struct EngineOptions {
    CharSpec field = CharSpec::all();
    bool with_w2 = false;  // also run the exhaustive W2 check per component
    HomologyCache* cache = nullptr;
};

// Full decision pipeline, componentwise: K1/K2 are Gorenstein; alpha = 2
// components are Gorenstein iff they are the complement of a cycle of
// length >= 4; otherwise CM + Euler condition + link-cycle condition,
// evaluated cheapest-first with short-circuiting.  Triangle-free
// components additionally cross-check against the W2 equivalence when W2
// is computed.
Verdict is_gorenstein(const Graph& g, const EngineOptions& opts = {});

std::string to_string(Shape s);
std::string to_string(DecisionPath p);

nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace gor

#endif
