#include "ramseylab/cycles.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ramseylab {

namespace {

// BFS distances from src inside the vertex set `allowed`; -1 = unreachable.
std::vector<int> bfs_dist(const Graph& g, Vertex src, const Bitset& allowed) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        Bitset nb = g.row(u) & allowed;
        for (int v = nb.next(); v >= 0; v = nb.next(v + 1))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

// Depth-bounded DFS for a cycle of exactly l edges whose minimum vertex is
// `anchor`; every cycle is met exactly once this way.
struct CycleDfs {
    const Graph& g;
    int l;
    Vertex anchor;
    const std::vector<int>& dist_to_anchor;
    Bitset allowed;
    Bitset visited;
    VertexList path;

    bool run() {
        visited.set(anchor);
        path.push_back(anchor);
        return expand(anchor, 0);
    }

    bool expand(Vertex u, int k) {
        if (k == l - 1) return g.adjacent(u, anchor);
        Bitset cand = g.row(u) & allowed;
        for (int v = cand.next(); v >= 0; v = cand.next(v + 1)) {
            if (visited.test(v)) continue;
            int d = dist_to_anchor[v];
            if (d < 0 || d > l - k - 1) continue;
            visited.set(v);
            path.push_back(v);
            if (expand(v, k + 1)) return true;
            path.pop_back();
            visited.reset(v);
        }
        return false;
    }
};

std::optional<VertexList> exact_cycle_search(const Graph& g, int l) {
    int n = g.order();
    for (Vertex a = 0; a + l <= n; ++a) {
        if (g.degree(a) < 2) continue;
        Bitset allowed(n);
        for (int v = a; v < n; ++v) allowed.set(v);
        auto dist = bfs_dist(g, a, allowed);
        CycleDfs dfs{g, l, a, dist, allowed, Bitset(n), {}};
        if (dfs.run()) return dfs.path;
    }
    return std::nullopt;
}

VertexList normalize_cycle(VertexList cyc) {
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    if (cyc.size() > 2 && cyc.back() < cyc[1]) {
        std::reverse(cyc.begin() + 1, cyc.end());
    }
    return cyc;
}

// Posa-style rotation-extension: grows a long path, closes it into a cycle
// when the endpoints touch, then absorbs outside neighbours. Best effort.
std::optional<VertexList> rotation_extension_long_cycle(const Graph& g, int l) {
    int n = g.order();
    auto comps = components(g);
    for (const auto& comp : comps) {
        if ((int)comp.size() < l) continue;
        Bitset in_comp = Bitset::from_vector(n, comp);
        VertexList path{comp[0]};
        Bitset on_path(n);
        on_path.set(comp[0]);
        int stall = 0;
        const int stall_cap = 4 * (int)comp.size() + 64;
        while ((int)path.size() < (int)comp.size() && stall < stall_cap) {
            Vertex end = path.back();
            Bitset ext = g.row(end) & in_comp;
            ext.subtract(on_path);
            if (int v = ext.next(); v >= 0) {
                path.push_back(v);
                on_path.set(v);
                stall = 0;
                continue;
            }
            // rotate: neighbour path[i] of the endpoint flips the tail
            Bitset nb = g.row(end) & on_path;
            bool rotated = false;
            for (int v = nb.next(); v >= 0 && !rotated; v = nb.next(v + 1)) {
                auto it = std::find(path.begin(), path.end(), v);
                size_t i = it - path.begin();
                if (i + 2 < path.size()) {
                    std::reverse(path.begin() + i + 1, path.end());
                    rotated = true;
                }
            }
            if (!rotated) break;
            ++stall;
        }
        if ((int)path.size() >= l && g.adjacent(path.front(), path.back()))
            return path;
        // try closing through a chord from the front
        Bitset nb = g.row(path.front()) & on_path;
        for (int v = nb.next(); v >= 0; v = nb.next(v + 1)) {
            auto it = std::find(path.begin(), path.end(), v);
            size_t i = it - path.begin();
            if ((int)(path.size() - i) >= l)
                return VertexList(path.begin() + i, path.end());
        }
    }
    return std::nullopt;
}

// Shrinks a cycle towards exactly l vertices using chords.
std::optional<VertexList> chord_reduce(const Graph& g, VertexList cyc, int l) {
    while ((int)cyc.size() > l) {
        int L = (int)cyc.size();
        bool shrunk = false;
        // prefer a chord that lands exactly on l
        for (int i = 0; i < L && !shrunk; ++i)
            for (int gap = 2; gap <= L - 2; ++gap) {
                int j = (i + gap) % L;
                if (!g.adjacent(cyc[i], cyc[j])) continue;
                int len_a = gap + 1;      // piece i..j plus chord
                int len_b = L - gap + 1;  // the other piece
                if (len_a != l && len_b != l) continue;
                VertexList next;
                if (len_a == l) {
                    for (int t = 0; t <= gap; ++t) next.push_back(cyc[(i + t) % L]);
                } else {
                    for (int t = gap; t <= L; ++t) next.push_back(cyc[(i + t) % L]);
                }
                cyc = next;
                shrunk = true;
                break;
            }
        if (shrunk) break;
        // otherwise take the smallest reduction that keeps >= l vertices
        int best_len = -1, best_i = -1, best_gap = -1;
        for (int i = 0; i < L; ++i)
            for (int gap = 2; gap <= L - 2; ++gap) {
                int j = (i + gap) % L;
                if (!g.adjacent(cyc[i], cyc[j])) continue;
                for (int len : {gap + 1, L - gap + 1}) {
                    if (len >= l && len < L && len > best_len) {
                        best_len = len;
                        best_i = i;
                        best_gap = gap;
                    }
                }
            }
        if (best_len < 0) return std::nullopt;
        VertexList next;
        int i = best_i, gap = best_gap;
        if (gap + 1 == best_len) {
            for (int t = 0; t <= gap; ++t) next.push_back(cyc[(i + t) % L]);
        } else {
            for (int t = gap; t <= L; ++t) next.push_back(cyc[(i + t) % L]);
        }
        cyc = next;
    }
    if ((int)cyc.size() == l) return cyc;
    return std::nullopt;
}

}  // namespace

CycleSearchResult find_cycle_of_length(const Graph& g, int l) {
    if (l < 3) throw std::domain_error("cycle length must be at least 3");
    if (l > g.order()) return {std::nullopt, true};
    if (l % 2 == 1 && bipartition(g)) return {std::nullopt, true};
    if (l <= kExactLengthThreshold) {
        auto cyc = exact_cycle_search(g, l);
        if (cyc) return {normalize_cycle(*cyc), true};
        return {std::nullopt, true};
    }
    if (auto longc = rotation_extension_long_cycle(g, l)) {
        if (auto cyc = chord_reduce(g, *longc, l)) return {normalize_cycle(*cyc), true};
    }
    if (auto cyc = exact_cycle_search(g, l))  // last resort, may be slow
        return {normalize_cycle(*cyc), true};
    return {std::nullopt, false};
}

CycleStats cycle_stats(const Graph& g, std::optional<int> length_cap) {
    CycleStats st;
    int cap = std::min(g.order(), length_cap.value_or(g.order()));
    bool bip = bipartition(g).has_value();
    for (int l = 3; l <= cap; ++l) {
        if (l % 2 == 1 && bip) continue;
        if (exact_cycle_search(g, l)) st.spectrum.insert(l);
    }
    if (!st.spectrum.empty()) {
        st.girth = *st.spectrum.begin();
        st.circumference = *st.spectrum.rbegin();
        for (int l : st.spectrum) {
            if (l % 2 == 1) st.longest_odd = l;
            else st.longest_even = l;
        }
    }
    return st;
}

PancyclicityClass classify_pancyclicity(const Graph& g) {
    CycleStats st = cycle_stats(g);
    PancyclicityClass out;
    if (st.spectrum.empty()) {
        out.tag = PancyclicityTag::acyclic;
        return out;
    }
    bool weak = true;
    for (int l = *st.girth; l <= *st.circumference; ++l)
        if (!st.spectrum.count(l)) {
            weak = false;
            out.missing_lengths.insert(l);
        }
    if (!weak) {
        out.tag = PancyclicityTag::neither;
        return out;
    }
    bool full = (*st.girth == 3) && (*st.circumference == g.order());
    if (full) {
        out.tag = PancyclicityTag::pancyclic;
        return out;
    }
    out.tag = PancyclicityTag::weakly_pancyclic;
    for (int l = 3; l <= g.order(); ++l)
        if (!st.spectrum.count(l)) out.missing_lengths.insert(l);
    return out;
}

namespace {

struct PathDfs {
    const Graph& g;
    Vertex target;
    int l;
    const std::vector<int>& dist_to_target;
    Bitset visited;
    VertexList path;

    bool expand(Vertex u, int k) {
        if (k == l) return u == target;
        Bitset cand = g.row(u);
        for (int v = cand.next(); v >= 0; v = cand.next(v + 1)) {
            if (visited.test(v)) continue;
            if (v == target && k + 1 != l) continue;
            int d = dist_to_target[v];
            if (d < 0 || d > l - k - 1) continue;
            visited.set(v);
            path.push_back(v);
            if (expand(v, k + 1)) return true;
            path.pop_back();
            visited.reset(v);
        }
        return false;
    }
};

}  // namespace

PathSearchResult find_path_of_length(const Graph& g, const PathQuery& q) {
    if (q.x == q.y) throw std::domain_error("path endpoints must differ");
    if (q.length < 1) throw std::domain_error("path length must be at least 1");
    if (q.x < 0 || q.y < 0 || q.x >= g.order() || q.y >= g.order())
        throw std::domain_error("path endpoint out of range");
    if (q.length > g.order() - 1) return {std::nullopt, true};
    Bitset all(g.order());
    all.set_all();
    auto dist = bfs_dist(g, q.y, all);
    PathDfs dfs{g, q.y, q.length, dist, Bitset(g.order()), {q.x}};
    dfs.visited.set(q.x);
    if (dfs.expand(q.x, 0)) return {dfs.path, true};
    return {std::nullopt, true};
}

BipanReport is_bipanconnected(const Graph& g) {
    auto bip = bipartition(g);
    if (!bip) throw std::domain_error("is_bipanconnected: graph is not bipartite");
    int a = (int)bip->part_a.size(), b = (int)bip->part_b.size();
    if (b < 2) throw std::domain_error("is_bipanconnected: needs |A| >= |B| >= 2");
    Bitset in_a = Bitset::from_vector(g.order(), bip->part_a);

    auto feasible_cap = [&](bool x_in_a, bool y_in_a) {
        if (x_in_a && y_in_a) return std::min(2 * b, 2 * (a - 1));
        if (!x_in_a && !y_in_a) return std::min(2 * b - 2, 2 * a);
        return 2 * b - 1;
    };

    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y) {
            bool xa = in_a.test(x), ya = in_a.test(y);
            int cap = feasible_cap(xa, ya);
            int start = (xa == ya) ? 2 : 3;  // same side: even; across: odd, >= 2
            for (int l = start; l <= cap; l += 2) {
                if (!find_path_of_length(g, {x, y, l}).found())
                    return {false, BipanFailure{x, y, l}};
            }
        }
    return {true, std::nullopt};
}

}  // namespace ramseylab
