#include "gor/gorenstein.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace gor {

LinkCycleCheck link_cycle_condition(const Graph& g) {
    auto summary = independence_summary(g);
    if (summary.alpha < 2) return {true, std::nullopt};
    for (VertexSet f : independent_sets(g)) {
        if (set_size(f) != summary.alpha - 2) continue;
        auto sub = private_subgraph(g, f);
        auto len = is_cycle_graph(complement(sub.graph));
        if (!len || *len < 4) return {false, f};
    }
    return {true, std::nullopt};
}

namespace {

ComponentVerdict decide_component(const Graph& c, const EngineOptions& opts,
                                  HomologyCache& cache) {
    ComponentVerdict v;
    int n = c.order();
    if (n == 1) {
        v.shape = Shape::K1;
        v.path = DecisionPath::Trivial;
        v.gorenstein = true;  // isolated vertices are accepted as Gorenstein
        return v;
    }
    if (n == 2) {
        v.shape = Shape::K2;
        v.path = DecisionPath::Trivial;
        v.gorenstein = true;
        if (opts.with_w2) v.w2 = is_w2(c);
        return v;
    }

    auto summary = independence_summary(c);
    v.well_covered = is_well_covered(summary);
    v.euler_ok = euler_condition(summary);

    if (summary.alpha == 2) {
        v.path = DecisionPath::AlphaTwo;
        auto len = is_complement_of_cycle(c);
        if (len && *len >= 4) {
            v.shape = Shape::ComplementOfCycle;
            v.cycle_length = *len;
            v.gorenstein = true;
        }
    } else {
        v.path = DecisionPath::FullCriterion;
        if (*v.euler_ok) {
            auto link = link_cycle_condition(c);
            v.link_condition_ok = link.ok;
            v.link_witness = link.witness;
            if (link.ok) {
                auto cm = is_cm(c, opts.field, cache);
                v.cm = cm.cm;
                v.cm_witness = cm.witness;
                v.gorenstein = cm.cm;
            }
        }
    }

    if (opts.with_w2) {
        v.w2 = is_w2(c);
        if (is_triangle_free(c)) {
            // Gorenstein <-> W2 for triangle-free graphs without isolated
            // vertices; a disagreement means the engine is broken.
            if (v.w2->verdict != v.gorenstein)
                throw std::logic_error(
                    "triangle-free W2/Gorenstein cross-check failed");
            if (v.path == DecisionPath::FullCriterion)
                v.path = DecisionPath::TriangleFree;
        }
    }
    return v;
}

}  // namespace

Verdict is_gorenstein(const Graph& g, const EngineOptions& opts) {
    check_vertex_cap(g.order());
    HomologyCache& cache = opts.cache ? *opts.cache : global_homology_cache();
    Verdict verdict;
    verdict.field = opts.field;
    verdict.gorenstein = true;
    for (VertexSet comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        ComponentVerdict cv = decide_component(sub.graph, opts, cache);
        cv.vertices = sub.original;
        verdict.gorenstein = verdict.gorenstein && cv.gorenstein;
        verdict.components.push_back(std::move(cv));
    }
    return verdict;
}

std::string to_string(Shape s) {
    switch (s) {
        case Shape::K1: return "K1";
        case Shape::K2: return "K2";
        case Shape::ComplementOfCycle: return "complementOfCycle";
        default: return "other";
    }
}

std::string to_string(DecisionPath p) {
    switch (p) {
        case DecisionPath::Trivial: return "trivial";
        case DecisionPath::AlphaTwo: return "alphaTwo";
        case DecisionPath::TriangleFree: return "triangleFree";
        default: return "fullCriterion";
    }
}

namespace {

Shape shape_from_string(const std::string& s) {
    if (s == "K1") return Shape::K1;
    if (s == "K2") return Shape::K2;
    if (s == "complementOfCycle") return Shape::ComplementOfCycle;
    return Shape::Other;
}

DecisionPath path_from_string(const std::string& s) {
    if (s == "trivial") return DecisionPath::Trivial;
    if (s == "alphaTwo") return DecisionPath::AlphaTwo;
    if (s == "triangleFree") return DecisionPath::TriangleFree;
    return DecisionPath::FullCriterion;
}

// Masks inside a ComponentVerdict are in component-local labels; JSON
// reports original labels via the component's vertex list.
nlohmann::json mask_to_labels(VertexSet s, const std::vector<int>& original) {
    auto arr = nlohmann::json::array();
    for (int v : set_members(s)) arr.push_back(original[v]);
    return arr;
}

VertexSet labels_to_mask(const nlohmann::json& arr, const std::vector<int>& original) {
    VertexSet s = 0;
    for (int label : arr) {
        for (std::size_t i = 0; i < original.size(); ++i)
            if (original[i] == label) s |= bit(static_cast<int>(i));
    }
    return s;
}

}  // namespace

nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["field"] = v.field.every_field ? nlohmann::json("all")
                                     : nlohmann::json(v.field.characteristic);
    j["gorenstein"] = v.gorenstein;
    j["components"] = nlohmann::json::array();
    for (const auto& c : v.components) {
        nlohmann::json jc;
        jc["component"] = c.vertices;
        jc["shape"] = to_string(c.shape);
        if (c.shape == Shape::ComplementOfCycle)
            jc["cycleLength"] = c.cycle_length;
        jc["wellCovered"] =
            c.well_covered ? nlohmann::json(*c.well_covered) : nlohmann::json();
        if (c.w2) {
            nlohmann::json jw;
            jw["verdict"] = c.w2->verdict;
            switch (c.w2->failure) {
                case W2Certificate::Failure::DegenerateInput:
                    jw["failure"] = "degenerateInput";
                    break;
                case W2Certificate::Failure::Pair:
                    jw["failure"] = "pair";
                    jw["a1"] = mask_to_labels(c.w2->a1, c.vertices);
                    jw["a2"] = mask_to_labels(c.w2->a2, c.vertices);
                    break;
                default:
                    break;
            }
            jc["w2"] = jw;
        } else {
            jc["w2"] = nullptr;
        }
        jc["cm"] = c.cm ? nlohmann::json(*c.cm) : nlohmann::json();
        jc["eulerOk"] = c.euler_ok ? nlohmann::json(*c.euler_ok) : nlohmann::json();
        jc["linkConditionOk"] = c.link_condition_ok
                                    ? nlohmann::json(*c.link_condition_ok)
                                    : nlohmann::json();
        nlohmann::json jwit;
        if (c.link_witness)
            jwit["linkF"] = mask_to_labels(*c.link_witness, c.vertices);
        if (c.cm_witness) {
            jwit["reisnerF"] = mask_to_labels(c.cm_witness->first, c.vertices);
            jwit["reisnerDim"] = c.cm_witness->second;
        }
        jc["witness"] = jwit.empty() ? nlohmann::json() : jwit;
        jc["gorenstein"] = c.gorenstein;
        jc["path"] = to_string(c.path);
        j["components"].push_back(std::move(jc));
    }
    return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
    Verdict v;
    if (j.at("field").is_string())
        v.field = CharSpec::all();
    else {
        long p = j.at("field").get<long>();
        v.field = p == 0 ? CharSpec::zero() : CharSpec::prime(p);
    }
    v.gorenstein = j.at("gorenstein").get<bool>();
    for (const auto& jc : j.at("components")) {
        ComponentVerdict c;
        c.vertices = jc.at("component").get<std::vector<int>>();
        c.shape = shape_from_string(jc.at("shape").get<std::string>());
        if (jc.contains("cycleLength")) c.cycle_length = jc["cycleLength"].get<int>();
        if (!jc.at("wellCovered").is_null())
            c.well_covered = jc["wellCovered"].get<bool>();
        if (!jc.at("w2").is_null()) {
            W2Certificate w;
            w.verdict = jc["w2"].at("verdict").get<bool>();
            if (jc["w2"].contains("failure")) {
                std::string f = jc["w2"]["failure"].get<std::string>();
                if (f == "degenerateInput")
                    w.failure = W2Certificate::Failure::DegenerateInput;
                else if (f == "pair") {
                    w.failure = W2Certificate::Failure::Pair;
                    w.a1 = labels_to_mask(jc["w2"]["a1"], c.vertices);
                    w.a2 = labels_to_mask(jc["w2"]["a2"], c.vertices);
                }
            }
            c.w2 = w;
        }
        if (!jc.at("cm").is_null()) c.cm = jc["cm"].get<bool>();
        if (!jc.at("eulerOk").is_null()) c.euler_ok = jc["eulerOk"].get<bool>();
        if (!jc.at("linkConditionOk").is_null())
            c.link_condition_ok = jc["linkConditionOk"].get<bool>();
        if (!jc.at("witness").is_null()) {
            const auto& jwit = jc["witness"];
            if (jwit.contains("linkF"))
                c.link_witness = labels_to_mask(jwit["linkF"], c.vertices);
            if (jwit.contains("reisnerF"))
                c.cm_witness = std::make_pair(
                    labels_to_mask(jwit["reisnerF"], c.vertices),
                    jwit["reisnerDim"].get<int>());
        }
        c.gorenstein = jc.at("gorenstein").get<bool>();
        c.path = path_from_string(jc.at("path").get<std::string>());
        v.components.push_back(std::move(c));
    }
    return v;
}

}  // namespace gor
