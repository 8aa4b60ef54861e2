#ifndef RAMSEYLAB_PREDICATES_HPP
#define RAMSEYLAB_PREDICATES_HPP

#include <optional>
#include <string>

#include "ramseylab/cycles.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

// The (n, m) pair: red target B_n or K_{2,n}, blue target C_m. Range flags
// for the two supported parameter regimes are fixed at construction.
struct RamseyParams {
    int n = 1;
    int m = 3;
    bool thm1_range = false;  // m odd, m >= 7, n >= 2m-3
    bool thm2_range = false;  // m odd, m >= 7, n >= 2m+499, n >= 3493

    RamseyParams(int n_, int m_) : n(n_), m(m_) {
        if (n < 1) throw std::domain_error("n must be positive");
        if (m < 3) throw std::domain_error("m must be at least 3");
        bool odd7 = (m % 2 == 1) && m >= 7;
        thm1_range = odd7 && n >= 2 * m - 3;
        thm2_range = odd7 && n >= 2 * m + 499 && n >= 3493;
    }
};

enum class RedTarget { book, k2n };

// Red graph on K_N; blue is implicitly its complement and never stored.
struct TwoColoring {
    Graph red;

    Graph blue() const { return complement(red); }
    int order() const { return red.order(); }
};

enum class WitnessKind { red_book, red_k2n, blue_cycle, good_coloring };

struct Witness {
    WitnessKind kind = WitnessKind::good_coloring;
    // red_book: base edge; red_k2n: the side-2 pair
    Vertex base_u = -1;
    Vertex base_v = -1;
    VertexList pages;   // n common neighbours (book pages / side-n vertices)
    VertexList cycle;   // blue cycle vertex sequence

    bool validate(const TwoColoring& c, const RamseyParams& p) const;
};

const char* witness_kind_name(WitnessKind k);

// Base (x,y) over edges {x,y} plus n common neighbours; absent iff g has no
// B_n. Pages are the lowest-indexed qualifying vertices.
std::optional<Witness> find_book(const Graph& g, int n);

// Same scan over all vertex pairs, adjacent or not; absent iff g has no
// K_{2,n} subgraph.
std::optional<Witness> find_k2n(const Graph& g, int n);

// Red-first evaluation: red target if present, else blue C_m, else a good
// colouring. The blue search is exact whenever the red graph's complement
// admits one of the exact-absence shortcuts (always true in the supported
// parameter sweeps); exactness is reported.
struct Evaluation {
    Witness witness;
    bool blue_search_exact = true;
};
Evaluation evaluate_coloring(const TwoColoring& c, const RamseyParams& p,
                             RedTarget target);

}  // namespace ramseylab

#endif
