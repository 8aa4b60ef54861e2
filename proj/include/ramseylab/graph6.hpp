#ifndef RAMSEYLAB_GRAPH6_HPP
#define RAMSEYLAB_GRAPH6_HPP

#include <stdexcept>
#include <string>

#include "ramseylab/graph.hpp"

namespace ramseylab {

struct Graph6Error : std::runtime_error {
    size_t offset;  // byte position of the offending character
    Graph6Error(const std::string& msg, size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// graph6 codec, bit-exact with the de facto standard: order in the short
// (n <= 62) or 3-byte long form, then the upper triangle column by column in
// big-endian 6-bit groups, each character offset by 63. An optional
// ">>graph6<<" header is accepted on input.
Graph parse_graph6(const std::string& s);
std::string write_graph6(const Graph& g);

// Edge-list form: first line "N", then one "u v" pair per line, 0-indexed.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace ramseylab

#endif
