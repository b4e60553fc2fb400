#ifndef GOR_IO_HPP
#define GOR_IO_HPP

#include <iosfwd>
#include <string>

#include "gor/graph.hpp"

namespace gor {

// Edge-list text: one edge per line as two 0-based labels; `#` comments
// and blank lines ignored; optional `n=<k>` header fixes the vertex
// count, otherwise it is 1 + max label.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

// Standard graph6 ASCII encoding (n < 63).
Graph parse_graph6(const std::string& line);

std::string to_edge_list(const Graph& g);

}  // namespace gor

#endif
