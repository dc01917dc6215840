#include <doctest.h>

#include <random>
#include <set>

#include "ctrlchain/matching.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ctrlchain;

namespace {

// the 5-node worked example: 1->2, 2->3, 2->4, 4->5 (here 0-based)
StructuralNetwork chain_example() {
    return StructuralNetwork(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
}

void check_valid(const BipartiteGraph& b, const MatchingResult& m) {
    std::set<int> plus_used, minus_used;
    std::set<std::pair<int, int>> edge_set(b.edges.begin(), b.edges.end());
    for (const auto& [u, v] : m.matched_edges) {
        CHECK(edge_set.count({u, v}) == 1);
        CHECK(plus_used.insert(u).second);
        CHECK(minus_used.insert(v).second);
    }
    for (int v : m.unmatched_minus) CHECK(minus_used.count(v) == 0);
    CHECK(static_cast<int>(m.matched_edges.size()) + m.unmatched_count() == b.n);
}

}  // namespace

TEST_CASE("bipartite representation mirrors the directed links") {
    BipartiteGraph b = bipartite_representation(chain_example());
    CHECK(b.n == 5);
    std::set<std::pair<int, int>> expected = {{0, 1}, {1, 2}, {1, 3}, {3, 4}};
    CHECK(std::set<std::pair<int, int>>(b.edges.begin(), b.edges.end()) == expected);
}

TEST_CASE("bipartite representation of an empty network has no edges") {
    BipartiteGraph b = bipartite_representation(StructuralNetwork(3, {}));
    CHECK(b.edges.empty());
}

TEST_CASE("a bidirected pair splits into two bipartite edges") {
    BipartiteGraph b = bipartite_representation(StructuralNetwork(2, {{0, 1}, {1, 0}}));
    std::set<std::pair<int, int>> expected = {{0, 1}, {1, 0}};
    CHECK(std::set<std::pair<int, int>>(b.edges.begin(), b.edges.end()) == expected);
}

TEST_CASE("chain example: matching size 3, two unmatched, both driver sets reachable") {
    BipartiteGraph b = bipartite_representation(chain_example());
    std::set<std::vector<int>> driver_sets;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        MatchingResult m = maximum_matching(b, seed);
        CHECK(m.matched_edges.size() == 3);
        CHECK(m.unmatched_count() == 2);
        CHECK(m.driver_count() == 2);
        check_valid(b, m);
        driver_sets.insert(driver_nodes(m));
    }
    CHECK(driver_sets.count({0, 2}) == 1);  // nodes 1 and 3
    CHECK(driver_sets.count({0, 3}) == 1);  // nodes 1 and 4
    CHECK(driver_sets.size() == 2);
}

TEST_CASE("bidirected triangle is fully matched and still needs one driver") {
    StructuralNetwork c3(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
    MatchingResult m = maximum_matching(bipartite_representation(c3), 1);
    CHECK(m.unmatched_count() == 0);
    CHECK(m.driver_count() == 1);
    CHECK(driver_nodes(m) == std::vector<int>{0});
}

TEST_CASE("out-star matches one edge and leaves the leaves unmatched") {
    StructuralNetwork star(4, {{0, 1}, {0, 2}, {0, 3}});
    MatchingResult m = maximum_matching(bipartite_representation(star), 0);
    CHECK(m.matched_edges.size() == 1);
    CHECK(m.unmatched_count() == 3);
    CHECK(m.driver_count() == 3);
}

TEST_CASE("empty-edge network leaves every node unmatched") {
    MatchingResult m = maximum_matching(bipartite_representation(StructuralNetwork(2, {})), 0);
    CHECK(driver_nodes(m) == std::vector<int>{0, 1});
}

TEST_CASE("matching cardinality equals exhaustive search on small digraphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const double p = 0.05 + 0.5 * testsupport::rand_unit(rng);
        StructuralNetwork g = testsupport::random_digraph(n, p, rng());
        BipartiteGraph b = bipartite_representation(g);
        MatchingResult m = maximum_matching(b, rng());
        CHECK(static_cast<int>(m.matched_edges.size()) == testsupport::exhaustive_max_matching(b));
        CHECK(m.driver_count() == std::max(1, m.unmatched_count()));
        check_valid(b, m);
    }
}

TEST_CASE("identical graph and seed give identical matchings") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        StructuralNetwork g = testsupport::random_digraph(8, 0.3, rng());
        BipartiteGraph b = bipartite_representation(g);
        for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
            MatchingResult m1 = maximum_matching(b, seed);
            MatchingResult m2 = maximum_matching(b, seed);
            CHECK(m1.matched_edges == m2.matched_edges);
            CHECK(m1.unmatched_minus == m2.unmatched_minus);
        }
    }
}

TEST_CASE("dense bidirected networks are fully matched") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        StructuralNetwork g = testsupport::er_bidirected(40, 10.0, 1000 + seed);
        MatchingResult m = maximum_matching(bipartite_representation(g), seed);
        CHECK(m.unmatched_count() == 0);
        CHECK(m.driver_count() == 1);
    }
}
