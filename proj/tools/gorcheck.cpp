#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "gor/circulant.hpp"
#include "gor/gorenstein.hpp"
#include "gor/io.hpp"
#include "gor/sqc.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

gor::CirculantSpec parse_circulant_arg(const std::string& arg) {
    auto colon = arg.find(':');
    if (colon == std::string::npos)
        throw gor::ParseError("circulant spec must look like n:s1,s2,...");
    gor::CirculantSpec spec;
    try {
        spec.n = std::stoi(arg.substr(0, colon));
        std::istringstream rest(arg.substr(colon + 1));
        std::string tok;
        while (std::getline(rest, tok, ','))
            spec.connections.push_back(std::stoi(tok));
    } catch (const std::exception&) {
        throw gor::ParseError("bad circulant spec: " + arg);
    }
    if (spec.connections.empty())
        throw gor::ParseError("circulant spec needs at least one connection");
    return spec;
}

gor::CharSpec parse_char_arg(const std::string& arg) {
    if (arg == "all") return gor::CharSpec::all();
    long p = std::stol(arg);
    return p == 0 ? gor::CharSpec::zero() : gor::CharSpec::prime(p);
}

struct InputArgs {
    std::string edges_path;
    std::string g6;
    std::string circulant;

    gor::Graph load() const {
        int sources = !edges_path.empty() + !g6.empty() + !circulant.empty();
        if (sources != 1)
            throw gor::ParseError("exactly one of --edges/--g6/--circulant required");
        if (!edges_path.empty()) return gor::parse_edge_list_file(edges_path);
        if (!g6.empty()) return gor::parse_graph6(g6);
        return gor::circulant(parse_circulant_arg(circulant));
    }
};

void add_input_flags(CLI::App* cmd, InputArgs& in) {
    cmd->add_option("--edges", in.edges_path, "edge-list file");
    cmd->add_option("--g6", in.g6, "graph6 string");
    cmd->add_option("--circulant", in.circulant,
                    "circulant spec n:s1,s2,... (connections as in C_n(S))");
}

void print_human_verdict(const gor::Verdict& v) {
    for (const auto& c : v.components) {
        std::cout << "component {";
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            std::cout << (i ? "," : "") << c.vertices[i];
        std::cout << "}: shape=" << gor::to_string(c.shape);
        if (c.shape == gor::Shape::ComplementOfCycle)
            std::cout << "(" << c.cycle_length << ")";
        std::cout << " path=" << gor::to_string(c.path);
        auto show = [](const char* name, const std::optional<bool>& val) {
            if (val) std::cout << " " << name << "=" << (*val ? "true" : "false");
        };
        show("wellCovered", c.well_covered);
        if (c.w2) std::cout << " w2=" << (c.w2->verdict ? "true" : "false");
        show("eulerOk", c.euler_ok);
        show("linkOk", c.link_condition_ok);
        show("cm", c.cm);
        std::cout << " gorenstein=" << (c.gorenstein ? "true" : "false");
        if (c.w2 && c.w2->failure == gor::W2Certificate::Failure::Pair) {
            auto labels = [&](gor::VertexSet s) {
                std::string out = "{";
                for (int lv : gor::set_members(s)) {
                    if (out.size() > 1) out += ",";
                    out += std::to_string(c.vertices[lv]);
                }
                return out + "}";
            };
            std::cout << " w2FailingPair=" << labels(c.w2->a1) << labels(c.w2->a2);
        }
        if (c.link_witness) {
            std::cout << " linkWitnessF={";
            bool first = true;
            for (int lv : gor::set_members(*c.link_witness)) {
                std::cout << (first ? "" : ",") << c.vertices[lv];
                first = false;
            }
            std::cout << "}";
        }
        std::cout << "\n";
    }
    std::cout << "gorenstein: " << (v.gorenstein ? "true" : "false") << "\n";
}

int run_classify(const InputArgs& in, const std::string& charspec,
                 const std::string& format, bool no_w2) {
    gor::Graph g = in.load();
    gor::EngineOptions opts;
    opts.field = parse_char_arg(charspec);
    opts.with_w2 = !no_w2;
    gor::Verdict v = gor::is_gorenstein(g, opts);
    if (format == "json")
        std::cout << gor::verdict_to_json(v).dump(2) << "\n";
    else
        print_human_verdict(v);
    return 0;
}

int run_survey(const std::string& family_name, long max_n, int jobs,
               const std::string& charspec, const std::string& format) {
    gor::SurveyFamily family;
    if (family_name == "quartic") family = gor::SurveyFamily::Quartic;
    else if (family_name == "cubic") family = gor::SurveyFamily::Cubic;
    else if (family_name == "band") family = gor::SurveyFamily::Band;
    else throw gor::ParseError("unknown family: " + family_name);

    gor::SurveyOptions opts;
    opts.max_n = max_n;
    opts.jobs = jobs;
    opts.field = parse_char_arg(charspec);
    auto rows = gor::survey(family, opts);

    if (format == "json") {
        for (const auto& r : rows) {
            nlohmann::json j;
            j["n"] = r.n;
            j["a"] = r.a;
            j["b"] = r.b;
            j["prediction"] = r.prediction;
            j["skipped"] = r.skipped;
            j["match"] = r.match;
            j["millis"] = r.millis;
            j["verdict"] = r.skipped ? nlohmann::json()
                                     : gor::verdict_to_json(r.verdict);
            std::cout << j.dump() << "\n";
        }
    } else {
        std::cout << gor::survey_row_csv_header() << "\n";
        for (const auto& r : rows) std::cout << gor::survey_row_csv(r) << "\n";
    }
    return gor::survey_all_match(rows) ? 0 : kExitMismatch;
}

int run_sqc(const InputArgs& in, const std::string& charspec,
            const std::string& format) {
    gor::Graph g = in.load();
    auto partition = gor::find_sqc_partition(g);
    bool isolated = false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) isolated = true;

    nlohmann::json j;
    j["sqc"] = partition.has_value();
    if (partition) j["partition"] = gor::sqc_partition_to_json(*partition);
    if (partition && !isolated && g.order() > 0) {
        bool theorem = gor::sqc_gorenstein(g);
        gor::EngineOptions opts;
        opts.field = parse_char_arg(charspec);
        bool engine = gor::is_gorenstein(g, opts).gorenstein;
        j["gorenstein"] = theorem;
        j["engineGorenstein"] = engine;
        j["crossCheck"] = theorem == engine ? "agree" : "DISAGREE";
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        if (!partition) {
            std::cout << "not SQC\n";
        } else {
            std::cout << "SQC partition: " << j["partition"].dump() << "\n";
            if (j.contains("gorenstein"))
                std::cout << "gorenstein: " << (j["gorenstein"].get<bool>() ? "true" : "false")
                          << " (engine cross-check: " << j["crossCheck"].get<std::string>()
                          << ")\n";
            else
                std::cout << "gorenstein: n/a (isolated vertex or empty graph)\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gorenstein / well-covered / W2 classification of small graphs"};
    app.require_subcommand(1);

    std::string charspec = "all";
    std::string format = "human";
    int cap = 0;
    app.add_option("--char", charspec, "field characteristic: all, 0, or a prime")
        ->envname("GORCHECK_CHAR");
    app.add_option("--format", format, "output format: human, json, csv")
        ->envname("GORCHECK_FORMAT");
    app.add_option("--cap", cap, "vertex-cap override (default 24)")
        ->envname("GORCHECK_CAP");

    InputArgs classify_in, sqc_in;
    bool no_w2 = false;
    auto* classify = app.add_subcommand("classify", "full Gorenstein verdict");
    classify->fallthrough();
    add_input_flags(classify, classify_in);
    classify->add_flag("--no-w2", no_w2, "skip the exhaustive W2 check");

    std::string family = "quartic";
    long max_n = 14;
    int jobs = 1;
    auto* survey = app.add_subcommand("survey", "cross-validate a closed-form family");
    survey->fallthrough();
    survey->add_option("--family", family, "quartic, cubic, or band")->required();
    survey->add_option("--max-n", max_n, "largest vertex count")
        ->envname("GORCHECK_MAX_N");
    survey->add_option("--jobs", jobs, "worker threads")->envname("GORCHECK_JOBS");

    auto* sqc = app.add_subcommand("sqc", "SQC partition and theorem verdict");
    sqc->fallthrough();
    add_input_flags(sqc, sqc_in);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cap > 0) gor::set_vertex_cap(cap);
        if (classify->parsed())
            return run_classify(classify_in, charspec, format, no_w2);
        if (survey->parsed())
            return run_survey(family, max_n, jobs, charspec, format);
        return run_sqc(sqc_in, charspec, format);
    } catch (const gor::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const gor::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
