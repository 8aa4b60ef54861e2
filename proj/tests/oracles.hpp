#ifndef RAMSEYLAB_TEST_ORACLES_HPP
#define RAMSEYLAB_TEST_ORACLES_HPP

// Naive reference implementations used only by tests. They stay independent
// of the library's search code paths: plain permutation / enumeration with no
// pruning beyond feasibility.

#include <set>
#include <vector>

#include "ramseylab/graph.hpp"

namespace ramseylab::oracles {

// All cycle lengths present in g, by checking every vertex subset against
// every cyclic order. Usable up to ~10 vertices.
std::set<int> naive_cycle_spectrum(const Graph& g);

// Non-induced subgraph containment by brute backtracking over injections.
bool naive_has_subgraph(const Graph& host, const Graph& pattern);

// All x-y path lengths (edge counts) via full DFS enumeration.
std::set<int> naive_path_lengths(const Graph& g, Vertex x, Vertex y);

// Counts isomorphism classes of graphs on n labeled vertices by orbit
// partition under S_n. Usable up to n = 5 (full 2^C(n,2) sweep).
long brute_isomorphism_class_count(int n);

// |Aut(g)| by checking all permutations. Usable up to ~8 vertices.
long aut_count(const Graph& g);

// Smallest vertex-cut size by subset sweep; complete -> N-1, disconnected or
// trivial -> 0. Usable up to ~7 vertices.
int naive_connectivity(const Graph& g);

// Maximum edges of a C_4-free graph on n vertices over all labeled graphs.
// Usable up to n = 6.
int brute_max_c4free_edges(int n);

bool has_c4(const Graph& g);

}  // namespace ramseylab::oracles

#endif
