#include "gor/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace gor {

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_label = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first.rfind("n=", 0) == 0) {
            try {
                declared_n = std::stoi(first.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad header at line " + std::to_string(lineno));
            }
            if (declared_n < 0) throw ParseError("negative vertex count");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("bad vertex label at line " + std::to_string(lineno));
        }
        if (!(ls >> v))
            throw ParseError("missing second endpoint at line " + std::to_string(lineno));
        std::string extra;
        if (ls >> extra)
            throw ParseError("trailing tokens at line " + std::to_string(lineno));
        if (u < 0 || v < 0)
            throw ParseError("negative vertex label at line " + std::to_string(lineno));
        if (u == v)
            throw ParseError("self-loop at line " + std::to_string(lineno));
        edges.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_label + 1;
    if (max_label >= n) throw ParseError("vertex label exceeds declared n");
    return Graph(n, edges);
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_edge_list(in);
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw ParseError("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
    int n = s[0] - 63;
    if (n == 63) throw ParseError("graph6 n >= 63 not supported");
    std::size_t pos = 1;
    long needed_bits = static_cast<long>(n) * (n - 1) / 2;
    long needed_bytes = (needed_bits + 5) / 6;
    if (static_cast<long>(s.size()) - 1 != needed_bytes)
        throw ParseError("graph6 length mismatch");
    std::vector<std::pair<int, int>> edges;
    long bitpos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bitpos) {
            int byte = s[pos + bitpos / 6] - 63;
            if ((byte >> (5 - bitpos % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.order() << "\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v : set_members(g.neighbors(u)))
            if (v > u) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace gor
