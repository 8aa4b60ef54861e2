#include "doctest.h"

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "ramseylab/cycles.hpp"
#include "ramseylab/generators.hpp"

using namespace ramseylab;

namespace {

void check_cycle_embedding(const Graph& g, const VertexList& cyc, int l) {
    REQUIRE((int)cyc.size() == l);
    std::set<Vertex> distinct(cyc.begin(), cyc.end());
    CHECK((int)distinct.size() == l);
    for (int i = 0; i < l; ++i) CHECK(g.adjacent(cyc[i], cyc[(i + 1) % l]));
}

}  // namespace

TEST_CASE("cycle stats on named graphs") {
    auto k4 = cycle_stats(Graph::complete(4));
    CHECK(k4.spectrum == std::set<int>{3, 4});
    CHECK(*k4.girth == 3);
    CHECK(*k4.circumference == 4);

    auto k33 = cycle_stats(Graph::complete_bipartite(3, 3));
    CHECK(k33.spectrum == std::set<int>{4, 6});
    CHECK(*k33.girth == 4);
    CHECK(*k33.circumference == 6);
    CHECK_FALSE(k33.longest_odd.has_value());
    CHECK(*k33.longest_even == 6);

    auto pet = cycle_stats(Graph::petersen());
    CHECK(pet.spectrum == std::set<int>{5, 6, 8, 9});
    CHECK(*pet.girth == 5);
    CHECK(*pet.circumference == 9);
    CHECK(*pet.longest_odd == 9);
    CHECK(*pet.longest_even == 8);

    auto tree = cycle_stats(Graph::path_graph(6));
    CHECK(tree.spectrum.empty());
    CHECK_FALSE(tree.girth.has_value());
}

TEST_CASE("spectrum agrees with permutation enumerator") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        int n = uniform_int(rng, 1, 8);
        Graph g = erdos_renyi(n, unit_double(rng), rng);
        CHECK(cycle_stats(g).spectrum == oracles::naive_cycle_spectrum(g));
    }
}

TEST_CASE("find_cycle_of_length") {
    Graph c5 = Graph::cycle_graph(5);
    auto r = find_cycle_of_length(c5, 5);
    REQUIRE(r.found());
    check_cycle_embedding(c5, *r.cycle, 5);
    CHECK(*r.cycle == VertexList{0, 1, 2, 3, 4});

    auto pet7 = find_cycle_of_length(Graph::petersen(), 7);
    CHECK_FALSE(pet7.found());
    CHECK(pet7.exact);

    auto k54 = find_cycle_of_length(Graph::complete(5), 4);
    REQUIRE(k54.found());
    check_cycle_embedding(Graph::complete(5), *k54.cycle, 4);

    CHECK_THROWS_AS(find_cycle_of_length(c5, 2), std::domain_error);

    // odd cycles in bipartite graphs are rejected outright, whatever the size
    auto big = find_cycle_of_length(Graph::complete_bipartite(200, 200), 31);
    CHECK_FALSE(big.found());
    CHECK(big.exact);
}

TEST_CASE("long cycle heuristic path") {
    // above the exact threshold: rotation-extension plus chord reduction
    Graph k30 = Graph::complete(30);
    auto r = find_cycle_of_length(k30, 25);
    REQUIRE(r.found());
    check_cycle_embedding(k30, *r.cycle, 25);

    std::mt19937_64 rng(3);
    Graph dense = erdos_renyi(40, 0.6, rng);
    auto r2 = find_cycle_of_length(dense, 24);
    if (r2.found()) check_cycle_embedding(dense, *r2.cycle, 24);
}

TEST_CASE("returned cycles are normalised deterministically") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = erdos_renyi(uniform_int(rng, 4, 9), 0.6, rng);
        for (int l = 3; l <= g.order(); ++l) {
            auto r = find_cycle_of_length(g, l);
            if (!r.found()) continue;
            check_cycle_embedding(g, *r.cycle, l);
            auto mn = std::min_element(r.cycle->begin(), r.cycle->end());
            CHECK(mn == r.cycle->begin());
            if (l > 2) CHECK((*r.cycle)[1] < r.cycle->back());
        }
    }
}

TEST_CASE("pancyclicity classes") {
    CHECK(classify_pancyclicity(Graph::complete(5)).tag == PancyclicityTag::pancyclic);

    auto k33 = classify_pancyclicity(Graph::complete_bipartite(3, 3));
    CHECK(k33.tag == PancyclicityTag::neither);
    CHECK(k33.missing_lengths == std::set<int>{5});

    auto c7 = classify_pancyclicity(Graph::cycle_graph(7));
    CHECK(c7.tag == PancyclicityTag::weakly_pancyclic);

    CHECK(classify_pancyclicity(Graph::path_graph(4)).tag == PancyclicityTag::acyclic);
}

TEST_CASE("find_path_of_length") {
    Graph c6 = Graph::cycle_graph(6);
    auto direct = find_path_of_length(c6, {0, 1, 1});
    REQUIRE(direct.found());
    CHECK(*direct.path == VertexList{0, 1});

    CHECK_FALSE(find_path_of_length(c6, {0, 1, 3}).found());
    CHECK(find_path_of_length(c6, {0, 1, 5}).found());

    Graph k33 = Graph::complete_bipartite(3, 3);
    auto ham = find_path_of_length(k33, {0, 3, 5});
    REQUIRE(ham.found());
    CHECK(ham.path->size() == 6);

    CHECK_THROWS_AS(find_path_of_length(c6, {2, 2, 3}), std::domain_error);
}

TEST_CASE("path search agrees with naive enumeration") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 80; ++trial) {
        int n = uniform_int(rng, 2, 8);
        Graph g = erdos_renyi(n, unit_double(rng), rng);
        Vertex x = uniform_int(rng, 0, n - 1);
        Vertex y = uniform_int(rng, 0, n - 1);
        if (x == y) continue;
        auto truth = oracles::naive_path_lengths(g, x, y);
        for (int l = 1; l < n; ++l) {
            auto r = find_path_of_length(g, {x, y, l});
            CHECK(r.found() == (truth.count(l) > 0));
            if (r.found()) {
                CHECK((int)r.path->size() == l + 1);
                CHECK(r.path->front() == x);
                CHECK(r.path->back() == y);
                for (int i = 0; i < l; ++i)
                    CHECK(g.adjacent((*r.path)[i], (*r.path)[i + 1]));
            }
        }
    }
}

TEST_CASE("bipanconnectedness") {
    CHECK(is_bipanconnected(Graph::complete_bipartite(3, 3)).bipanconnected);
    CHECK(is_bipanconnected(Graph::complete_bipartite(2, 2)).bipanconnected);

    auto c6 = is_bipanconnected(Graph::cycle_graph(6));
    CHECK_FALSE(c6.bipanconnected);
    REQUIRE(c6.counterexample.has_value());
    CHECK(c6.counterexample->length == 3);

    CHECK_THROWS_AS(is_bipanconnected(Graph::cycle_graph(5)), std::domain_error);
    CHECK_THROWS_AS(is_bipanconnected(Graph::complete_bipartite(3, 1)), std::domain_error);
}
