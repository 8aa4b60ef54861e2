#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace ramseylab::oracles {

std::set<int> naive_cycle_spectrum(const Graph& g) {
    int n = g.order();
    std::set<int> lengths;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        int k = __builtin_popcount(mask);
        if (k < 3 || lengths.count(k)) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        // fix vs[0] first to quotient out rotations
        std::vector<int> rest(vs.begin() + 1, vs.end());
        std::sort(rest.begin(), rest.end());
        do {
            bool ok = g.adjacent(vs[0], rest.front()) && g.adjacent(vs[0], rest.back());
            for (size_t i = 0; ok && i + 1 < rest.size(); ++i)
                ok = g.adjacent(rest[i], rest[i + 1]);
            if (ok) {
                lengths.insert(k);
                break;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return lengths;
}

namespace {

bool extend_embedding(const Graph& host, const Graph& pattern, std::vector<int>& map,
                      std::vector<bool>& used, size_t i) {
    if (i == map.size()) return true;
    for (int h = 0; h < host.order(); ++h) {
        if (used[h]) continue;
        bool ok = true;
        for (size_t j = 0; ok && j < i; ++j)
            if (pattern.adjacent((int)i, (int)j) && !host.adjacent(h, map[j])) ok = false;
        if (!ok) continue;
        map[i] = h;
        used[h] = true;
        if (extend_embedding(host, pattern, map, used, i + 1)) return true;
        used[h] = false;
    }
    return false;
}

}  // namespace

bool naive_has_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return false;
    std::vector<int> map(pattern.order(), -1);
    std::vector<bool> used(host.order(), false);
    return extend_embedding(host, pattern, map, used, 0);
}

namespace {

void path_dfs(const Graph& g, Vertex u, Vertex y, int len, std::vector<bool>& seen,
              std::set<int>& out) {
    if (u == y) {
        out.insert(len);
        return;
    }
    for (int v = 0; v < g.order(); ++v)
        if (g.adjacent(u, v) && !seen[v]) {
            seen[v] = true;
            path_dfs(g, v, y, len + 1, seen, out);
            seen[v] = false;
        }
}

}  // namespace

std::set<int> naive_path_lengths(const Graph& g, Vertex x, Vertex y) {
    std::set<int> out;
    std::vector<bool> seen(g.order(), false);
    seen[x] = true;
    path_dfs(g, x, y, 0, seen, out);
    return out;
}

namespace {

uint64_t permute_mask(int n, uint64_t mask, const std::vector<int>& perm) {
    uint64_t out = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            if (!((mask >> bit) & 1)) continue;
            int pi = perm[i], pj = perm[j];
            if (pi > pj) std::swap(pi, pj);
            out |= uint64_t(1) << (pj * (pj - 1) / 2 + pi);
        }
    return out;
}

}  // namespace

long brute_isomorphism_class_count(int n) {
    int nbits = n * (n - 1) / 2;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    long classes = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << nbits); ++mask) {
        bool minimal = true;
        for (const auto& p : perms)
            if (permute_mask(n, mask, p) < mask) {
                minimal = false;
                break;
            }
        if (minimal) ++classes;
    }
    return classes;
}

long aut_count(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (int u = 0; ok && u < n; ++u)
            for (int v = u + 1; ok && v < n; ++v)
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

int naive_connectivity(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    for (int k = 1; k < n - 1; ++k) {
        // try all k-subsets as cuts
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VertexList keep;
            for (int v = 0; v < n; ++v)
                if (std::find(idx.begin(), idx.end(), v) == idx.end()) keep.push_back(v);
            if (!is_connected(induced(g, keep).graph)) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n - 1;
}

bool has_c4(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (common_neighborhood_bits(g, u, v).count() >= 2) return true;
    return false;
}

int brute_max_c4free_edges(int n) {
    int nbits = n * (n - 1) / 2;
    int best = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << nbits); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1) edges.emplace_back(i, j);
        if ((int)edges.size() <= best) continue;
        Graph g = Graph::from_edges(n, edges);
        if (!has_c4(g)) best = (int)edges.size();
    }
    return best;
}

}  // namespace ramseylab::oracles
