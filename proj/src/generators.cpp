#include "ramseylab/generators.hpp"

#include <algorithm>

namespace ramseylab {

Graph erdos_renyi(int n, double p, std::mt19937_64& rng) {
    std::vector<Bitset> rows(n, Bitset(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_double(rng) < p) {
                rows[u].set(v);
                rows[v].set(u);
            }
    return Graph::from_rows(std::move(rows));
}

Graph erdos_renyi(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return erdos_renyi(n, p, rng);
}

Graph erdos_renyi_min_degree(int n, double p, int min_degree, std::mt19937_64& rng) {
    Graph g = erdos_renyi(n, p, rng);
    std::vector<Bitset> rows(n, Bitset(n));
    for (int u = 0; u < n; ++u) rows[u] = g.row(u);
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) deg[u] = rows[u].count();
    for (int u = 0; u < n; ++u) {
        while (deg[u] < min_degree) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (v == u || rows[u].test(v)) continue;
                if (pick < 0 || deg[v] < deg[pick]) pick = v;
            }
            if (pick < 0) break;  // u already adjacent to everyone
            rows[u].set(pick);
            rows[pick].set(u);
            ++deg[u];
            ++deg[pick];
        }
    }
    return Graph::from_rows(std::move(rows));
}

Graph random_bipartite_min_degree(int a, int b, double p, int min_degree,
                                  std::mt19937_64& rng) {
    int n = a + b;
    std::vector<Bitset> rows(n, Bitset(n));
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v)
            if (unit_double(rng) < p) {
                rows[u].set(v);
                rows[v].set(u);
            }
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) deg[u] = rows[u].count();
    auto top_up = [&](int u, int lo, int hi) {
        while (deg[u] < min_degree) {
            int pick = -1;
            for (int v = lo; v < hi; ++v) {
                if (rows[u].test(v)) continue;
                if (pick < 0 || deg[v] < deg[pick]) pick = v;
            }
            if (pick < 0) break;
            rows[u].set(pick);
            rows[pick].set(u);
            ++deg[u];
            ++deg[pick];
        }
    };
    for (int u = 0; u < a; ++u) top_up(u, a, n);
    for (int u = a; u < n; ++u) top_up(u, 0, a);
    return Graph::from_rows(std::move(rows));
}

}  // namespace ramseylab
