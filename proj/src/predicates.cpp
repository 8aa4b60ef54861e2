#include "ramseylab/predicates.hpp"

#include <algorithm>
#include <set>

namespace ramseylab {

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::red_book: return "red_book";
        case WitnessKind::red_k2n: return "red_k2n";
        case WitnessKind::blue_cycle: return "blue_cycle";
        case WitnessKind::good_coloring: return "good_coloring";
    }
    return "?";
}

bool Witness::validate(const TwoColoring& c, const RamseyParams& p) const {
    const Graph& red = c.red;
    auto in_range = [&](Vertex v) { return v >= 0 && v < red.order(); };
    switch (kind) {
        case WitnessKind::red_book:
        case WitnessKind::red_k2n: {
            if (!in_range(base_u) || !in_range(base_v) || base_u == base_v) return false;
            if ((int)pages.size() != p.n) return false;
            if (kind == WitnessKind::red_book && !red.adjacent(base_u, base_v)) return false;
            std::set<Vertex> seen{base_u, base_v};
            for (Vertex w : pages) {
                if (!in_range(w) || seen.count(w)) return false;
                seen.insert(w);
                if (!red.adjacent(base_u, w) || !red.adjacent(base_v, w)) return false;
            }
            return true;
        }
        case WitnessKind::blue_cycle: {
            if ((int)cycle.size() != p.m) return false;
            std::set<Vertex> seen;
            for (size_t i = 0; i < cycle.size(); ++i) {
                Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
                if (!in_range(a) || seen.count(a)) return false;
                seen.insert(a);
                if (a == b || red.adjacent(a, b)) return false;  // blue edge = red non-edge
            }
            return true;
        }
        case WitnessKind::good_coloring:
            return true;
    }
    return false;
}

namespace {

std::optional<Witness> pair_scan(const Graph& g, int n, bool edges_only) {
    if (n < 1) throw std::domain_error("target size n must be positive");
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (edges_only && !g.adjacent(u, v)) continue;
            Bitset common = common_neighborhood_bits(g, u, v);
            if (common.count() < n) continue;
            Witness w;
            w.kind = edges_only ? WitnessKind::red_book : WitnessKind::red_k2n;
            w.base_u = u;
            w.base_v = v;
            for (int x = common.next(); x >= 0 && (int)w.pages.size() < n;
                 x = common.next(x + 1))
                w.pages.push_back(x);
            return w;
        }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> find_book(const Graph& g, int n) { return pair_scan(g, n, true); }

std::optional<Witness> find_k2n(const Graph& g, int n) { return pair_scan(g, n, false); }

Evaluation evaluate_coloring(const TwoColoring& c, const RamseyParams& p,
                             RedTarget target) {
    auto red = target == RedTarget::book ? find_book(c.red, p.n) : find_k2n(c.red, p.n);
    if (red) return {*red, true};
    auto blue = find_cycle_of_length(c.blue(), p.m);
    if (blue.found()) {
        Witness w;
        w.kind = WitnessKind::blue_cycle;
        w.cycle = *blue.cycle;
        return {w, true};
    }
    Witness good;
    good.kind = WitnessKind::good_coloring;
    return {good, blue.exact};
}

}  // namespace ramseylab
