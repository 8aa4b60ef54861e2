#include "ramseylab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ramseylab {

Graph::Graph(int order) : order_(order), adj_(order, Bitset(order)) {
    if (order < 0) throw std::domain_error("graph order must be non-negative");
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::domain_error("edge endpoint out of range");
        if (u == v) throw std::domain_error("loops are not allowed");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
    Graph g;
    g.order_ = (int)rows.size();
    g.adj_ = std::move(rows);
    for (int u = 0; u < g.order_; ++u) {
        if (g.adj_[u].size() != g.order_) throw std::domain_error("bad row size");
        if (g.adj_[u].test(u)) throw std::domain_error("loops are not allowed");
    }
    for (int u = 0; u < g.order_; ++u)
        for (int v = g.adj_[u].next(u + 1); v >= 0; v = g.adj_[u].next(v + 1))
            if (!g.adj_[v].test(u)) throw std::domain_error("adjacency not symmetric");
    return g;
}

Graph Graph::extend(const Graph& parent, uint64_t neighbourhood_mask) {
    int n = parent.order_ + 1;
    Graph g(n);
    for (int u = 0; u < parent.order_; ++u) {
        for (int v = parent.adj_[u].next(); v >= 0; v = parent.adj_[u].next(v + 1))
            g.adj_[u].set(v);
        if ((neighbourhood_mask >> u) & 1) {
            g.adj_[u].set(n - 1);
            g.adj_[n - 1].set(u);
        }
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        g.adj_[u].set_all();
        g.adj_[u].reset(u);
    }
    return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
        }
    return g;
}

Graph Graph::cycle_graph(int m) {
    if (m < 3) throw std::domain_error("cycle needs at least 3 vertices");
    Graph g(m);
    for (int u = 0; u < m; ++u) {
        int v = (u + 1) % m;
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

Graph Graph::path_graph(int nvertices) {
    Graph g(nvertices);
    for (int u = 0; u + 1 < nvertices; ++u) {
        g.adj_[u].set(u + 1);
        g.adj_[u + 1].set(u);
    }
    return g;
}

Graph Graph::book(int n) {
    // vertices 0,1 are the base, 2..n+1 the pages
    Graph g(n + 2);
    g.adj_[0].set(1);
    g.adj_[1].set(0);
    for (int p = 2; p < n + 2; ++p) {
        g.adj_[0].set(p);
        g.adj_[p].set(0);
        g.adj_[1].set(p);
        g.adj_[p].set(1);
    }
    return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    int n = a.order_ + b.order_;
    Graph g(n);
    for (int u = 0; u < a.order_; ++u)
        for (int v = a.adj_[u].next(); v >= 0; v = a.adj_[u].next(v + 1)) g.adj_[u].set(v);
    for (int u = 0; u < b.order_; ++u)
        for (int v = b.adj_[u].next(); v >= 0; v = b.adj_[u].next(v + 1))
            g.adj_[a.order_ + u].set(a.order_ + v);
    return g;
}

Graph Graph::petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer 5-cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);              // spokes
    }
    return from_edges(10, edges);
}

long Graph::edge_count() const {
    long twice = 0;
    for (int u = 0; u < order_; ++u) twice += adj_[u].count();
    return twice / 2;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.degree_sequence.reserve(g.order());
    for (int u = 0; u < g.order(); ++u) s.degree_sequence.push_back(g.degree(u));
    std::sort(s.degree_sequence.begin(), s.degree_sequence.end());
    s.min_degree = g.order() ? s.degree_sequence.front() : 0;
    s.max_degree = g.order() ? s.degree_sequence.back() : 0;
    return s;
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<Bitset> rows(n);
    for (int u = 0; u < n; ++u) {
        Bitset r = g.row(u);
        r.flip_all();
        r.reset(u);
        rows[u] = std::move(r);
    }
    return Graph::from_rows(std::move(rows));
}

InducedSubgraph induced(const Graph& g, const VertexList& s) {
    VertexList labels = s;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (Vertex v : labels)
        if (v < 0 || v >= g.order()) throw std::domain_error("induced: vertex out of range");
    int k = (int)labels.size();
    Graph sub(k);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(labels[i], labels[j])) edges.emplace_back(i, j);
    return {Graph::from_edges(k, edges), std::move(labels)};
}

Bitset common_neighborhood_bits(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::domain_error("common_neighborhood: u == v");
    Bitset b = g.row(u) & g.row(v);
    b.reset(u);
    b.reset(v);
    return b;
}

VertexList common_neighborhood(const Graph& g, Vertex u, Vertex v) {
    return common_neighborhood_bits(g, u, v).to_vector();
}

namespace {

// BFS over row bitsets; fills comp ids starting from `start`.
void bfs_component(const Graph& g, Vertex start, int id, std::vector<int>& comp) {
    std::queue<Vertex> q;
    comp[start] = id;
    q.push(start);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        const Bitset& row = g.row(u);
        for (int v = row.next(); v >= 0; v = row.next(v + 1))
            if (comp[v] < 0) {
                comp[v] = id;
                q.push(v);
            }
    }
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<int> comp(g.order(), -1);
    bfs_component(g, 0, 0, comp);
    return std::none_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

std::vector<VertexList> components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    int ncomp = 0;
    for (int v = 0; v < g.order(); ++v)
        if (comp[v] < 0) bfs_component(g, v, ncomp++, comp);
    std::vector<VertexList> out(ncomp);
    for (int v = 0; v < g.order(); ++v) out[comp[v]].push_back(v);
    std::stable_sort(out.begin(), out.end(), [](const VertexList& a, const VertexList& b) {
        return a.size() > b.size();
    });
    return out;
}

namespace {

// Unit-capacity max-flow on the vertex-split network; returns the number of
// internally disjoint s-t paths. s and t must be non-adjacent.
int local_connectivity(const Graph& g, Vertex s, Vertex t) {
    int n = g.order();
    // node 2v = v_in, 2v+1 = v_out; source = 2s+1, sink = 2t
    int nn = 2 * n;
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = 1;
    cap[2 * s][2 * s + 1] = n;  // endpoints are not counted as cut vertices
    cap[2 * t][2 * t + 1] = n;
    for (int u = 0; u < n; ++u)
        for (int v = g.row(u).next(); v >= 0; v = g.row(u).next(v + 1)) {
            cap[2 * u + 1][2 * v] = n;
        }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> pred(nn, -1);
        std::queue<int> q;
        q.push(source);
        pred[source] = source;
        while (!q.empty() && pred[sink] < 0) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < nn; ++v)
                if (pred[v] < 0 && cap[u][v] > 0) {
                    pred[v] = u;
                    q.push(v);
                }
        }
        if (pred[sink] < 0) break;
        for (int v = sink; v != source; v = pred[v]) {
            cap[pred[v]][v] -= 1;
            cap[v][pred[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int connectivity(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    long maxedges = (long)n * (n - 1) / 2;
    if (g.edge_count() == maxedges) return n - 1;
    // Classic reduction: for a fixed v0, a minimum cut either avoids v0
    // (caught by pairs v0,t with t non-adjacent) or contains it, in which
    // case two of v0's neighbours end up in different parts.
    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;
    int best = n - 1;
    for (int t = 0; t < n; ++t)
        if (t != v0 && !g.adjacent(v0, t)) best = std::min(best, local_connectivity(g, v0, t));
    VertexList nbrs = g.row(v0).to_vector();
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.adjacent(nbrs[i], nbrs[j]))
                best = std::min(best, local_connectivity(g, nbrs[i], nbrs[j]));
    return best;
}

ConnectivityClass connectivity_class(const Graph& g) {
    int n = g.order();
    if (n <= 1) return {0, std::nullopt};
    if (!is_connected(g)) return {0, std::nullopt};
    if (n == 2) return {1, std::nullopt};  // K_2: deleting either vertex trivialises it
    // Iterative Tarjan articulation search.
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), scan(n, 0);
    int timer = 0;
    std::vector<int> stack;
    int root_children = 0;
    std::optional<Vertex> cut;
    stack.push_back(0);
    disc[0] = low[0] = timer++;
    while (!stack.empty() && !cut) {
        int u = stack.back();
        int v = g.row(u).next(scan[u]);
        if (v < 0) {
            stack.pop_back();
            if (!stack.empty()) {
                int pu = stack.back();
                low[pu] = std::min(low[pu], low[u]);
                if (parent[u] == pu && pu != 0 && low[u] >= disc[pu]) cut = pu;
                if (pu == 0 && parent[u] == 0) ++root_children;
            }
            continue;
        }
        scan[u] = v + 1;
        if (disc[v] < 0) {
            parent[v] = u;
            disc[v] = low[v] = timer++;
            stack.push_back(v);
        } else if (v != parent[u]) {
            low[u] = std::min(low[u], disc[v]);
        }
    }
    if (!cut && root_children > 1) cut = 0;
    if (cut) return {1, cut};
    return {2, std::nullopt};
}

std::optional<Bipartition> bipartition(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            const Bitset& row = g.row(u);
            for (int v = row.next(); v >= 0; v = row.next(v + 1)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? b.part_a : b.part_b).push_back(v);
    if (b.part_a.size() < b.part_b.size()) std::swap(b.part_a, b.part_b);
    return b;
}

std::optional<VertexList> find_odd_cycle(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            const Bitset& row = g.row(u);
            for (int v = row.next(); v >= 0; v = row.next(v + 1)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    // tree paths u->lca and v->lca plus edge {u,v} close an
                    // odd cycle (endpoints have equal BFS parity)
                    VertexList pu, pv;
                    int a = u, b = v;
                    while (depth[a] > depth[b]) { pu.push_back(a); a = parent[a]; }
                    while (depth[b] > depth[a]) { pv.push_back(b); b = parent[b]; }
                    while (a != b) {
                        pu.push_back(a); a = parent[a];
                        pv.push_back(b); b = parent[b];
                    }
                    VertexList cyc = pu;
                    cyc.push_back(a);
                    cyc.insert(cyc.end(), pv.rbegin(), pv.rend());
                    return cyc;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace ramseylab
