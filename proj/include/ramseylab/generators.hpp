#ifndef RAMSEYLAB_GENERATORS_HPP
#define RAMSEYLAB_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "ramseylab/graph.hpp"

namespace ramseylab {

// Deterministic uniform double in [0,1) from the raw engine output; avoids
// std::uniform_real_distribution so seeded runs reproduce across platforms.
inline double unit_double(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + (int)(unit_double(rng) * (hi - lo + 1));
}

// Erdos-Renyi G(n, p); pair order is fixed so a seed pins the graph exactly.
Graph erdos_renyi(int n, double p, uint64_t seed);
Graph erdos_renyi(int n, double p, std::mt19937_64& rng);

// G(n, p) conditioned to minimum degree >= min_degree: missing degree is
// topped up with edges to the lowest-degree partners. Used by lemma suites.
Graph erdos_renyi_min_degree(int n, double p, int min_degree, std::mt19937_64& rng);

// Random bipartite graph on parts of size a and b with cross-edge
// probability p, then topped up to minimum degree >= min_degree.
Graph random_bipartite_min_degree(int a, int b, double p, int min_degree,
                                  std::mt19937_64& rng);

}  // namespace ramseylab

#endif
