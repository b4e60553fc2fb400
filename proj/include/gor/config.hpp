#ifndef GOR_CONFIG_HPP
#define GOR_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace gor {

// Hard representation limit: adjacency rows are 64-bit masks.
inline constexpr int kMaxVertices = 64;

// Downstream enumeration is exponential in the vertex count, so graph
// construction is capped.  The default cap can be raised explicitly
// (CLI --cap), but never past kMaxVertices.
int vertex_cap();
void set_vertex_cap(int cap);

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

void check_vertex_cap(int n);

}  // namespace gor

#endif
