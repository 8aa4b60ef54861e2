#ifndef RAMSEYLAB_CYCLES_HPP
#define RAMSEYLAB_CYCLES_HPP

#include <optional>
#include <set>

#include "ramseylab/graph.hpp"

namespace ramseylab {

// Fixed-length searches are exact (exhaustive depth-bounded DFS) up to this
// length; beyond it absence claims fall back to heuristics and are flagged.
constexpr int kExactLengthThreshold = 20;

struct CycleStats {
    std::optional<int> girth;
    std::optional<int> circumference;
    std::optional<int> longest_odd;
    std::optional<int> longest_even;
    std::set<int> spectrum;
};

enum class PancyclicityTag { pancyclic, weakly_pancyclic, neither, acyclic };

struct PancyclicityClass {
    PancyclicityTag tag = PancyclicityTag::acyclic;
    std::set<int> missing_lengths;
};

struct PathQuery {
    Vertex x = 0;
    Vertex y = 0;
    int length = 1;  // edge count
};

struct CycleSearchResult {
    std::optional<VertexList> cycle;
    bool exact = true;  // meaningful when cycle is absent

    bool found() const { return cycle.has_value(); }
};

struct PathSearchResult {
    std::optional<VertexList> path;  // q.length+1 vertices from x to y
    bool exact = true;

    bool found() const { return path.has_value(); }
};

// Exact spectrum of cycle lengths up to min(order, cap): a length belongs to
// the spectrum iff a cycle of exactly that length exists.
CycleStats cycle_stats(const Graph& g, std::optional<int> length_cap = std::nullopt);

// Cycle of exactly l vertices, normalised to the lexicographically smallest
// rotation/direction. l < 3 is a domain error. Absence is exact for
// l <= kExactLengthThreshold, for odd l in bipartite graphs, and for l > N.
CycleSearchResult find_cycle_of_length(const Graph& g, int l);

PancyclicityClass classify_pancyclicity(const Graph& g);

// Path with exactly q.length edges and all-distinct vertices from q.x to q.y.
PathSearchResult find_path_of_length(const Graph& g, const PathQuery& q);

struct BipanFailure {
    Vertex x = 0;
    Vertex y = 0;
    int length = 0;
};

struct BipanReport {
    bool bipanconnected = false;
    std::optional<BipanFailure> counterexample;
};

// Bipartite path-spectrum test: every vertex pair must admit paths of every
// parity-correct feasible length up to the caps 2|B|-1 (A to B), 2|B|-2
// (within B) and 2|B| (within A). A length is feasible when its alternation
// pattern fits inside the parts. Domain error on non-bipartite input or
// |B| < 2.
BipanReport is_bipanconnected(const Graph& g);

}  // namespace ramseylab

#endif
