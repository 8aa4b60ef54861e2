#ifndef RAMSEYLAB_GRAPH_HPP
#define RAMSEYLAB_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramseylab/bitset.hpp"

namespace ramseylab {

using Vertex = int;
using VertexList = std::vector<Vertex>;

// Immutable simple graph over dense vertex labels 0..N-1, one bitset row per
// vertex. Every "modification" builds a new value, so graphs can be shared
// freely between workers.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);
    static Graph from_rows(std::vector<Bitset> rows);
    // Parent plus one new vertex whose backward neighbourhood is given as a
    // bitmask over 0..parent.order()-1. Workhorse of the enumeration stream.
    static Graph extend(const Graph& parent, uint64_t neighbourhood_mask);

    static Graph complete(int n);
    static Graph empty_graph(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph cycle_graph(int m);
    static Graph path_graph(int nvertices);
    static Graph book(int n);            // K_2 joined to n independent vertices
    static Graph disjoint_union(const Graph& a, const Graph& b);
    static Graph petersen();

    int order() const { return order_; }
    long edge_count() const;
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const Bitset& row(Vertex u) const { return adj_[u]; }
    int degree(Vertex u) const { return adj_[u].count(); }

    bool operator==(const Graph& o) const = default;

private:
    int order_ = 0;
    std::vector<Bitset> adj_;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> degree_sequence;  // ascending
};

struct Bipartition {
    VertexList part_a;  // |A| >= |B|
    VertexList part_b;
};

// Induced subgraph plus the map back to the host graph's labels:
// vertex i of `graph` is `labels[i]` in the host.
struct InducedSubgraph {
    Graph graph;
    VertexList labels;

    VertexList to_host(const VertexList& vs) const {
        VertexList out;
        out.reserve(vs.size());
        for (Vertex v : vs) out.push_back(labels[v]);
        return out;
    }
};

DegreeStats degree_stats(const Graph& g);

Graph complement(const Graph& g);

// s may be given in any order; result vertices follow ascending host labels.
InducedSubgraph induced(const Graph& g, const VertexList& s);

// N(u) n N(v) minus {u,v}. Throws std::domain_error when u == v.
VertexList common_neighborhood(const Graph& g, Vertex u, Vertex v);
Bitset common_neighborhood_bits(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

// Maximal connected vertex sets, ordered by decreasing size (ties: smallest
// member first).
std::vector<VertexList> components(const Graph& g);

// Vertex connectivity k(G). Conventions: complete graph -> N-1, graphs on
// <= 1 vertex -> 0, disconnected -> 0.
int connectivity(const Graph& g);

// Cheap trichotomy 0 / 1 / 2 meaning k(G)=0, k(G)=1, k(G)>=2; cut_vertex is
// set when the answer is 1. Linear-time, used on large graphs where the full
// k(G) is never needed.
struct ConnectivityClass {
    int cls = 0;
    std::optional<Vertex> cut_vertex;
};
ConnectivityClass connectivity_class(const Graph& g);

// Present iff g has no odd cycle. Parts are normalised so |A| >= |B|; within
// each component the side containing the smallest vertex goes to A first,
// then the whole pair is swapped if needed.
std::optional<Bipartition> bipartition(const Graph& g);

// Odd cycle witness (as a closed vertex sequence without the repeated
// endpoint) when g is not bipartite.
std::optional<VertexList> find_odd_cycle(const Graph& g);

}  // namespace ramseylab

#endif
