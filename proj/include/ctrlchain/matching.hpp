#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ctrlchain/net.hpp"

namespace ctrlchain {

/// Split-node representation: node v becomes v+ and v-, and every directed
/// link (v->w) becomes the undirected edge (v+, w-).
struct BipartiteGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (v_plus, w_minus)
};

struct MatchingResult {
    std::vector<std::pair<int, int>> matched_edges;  // sorted by v_plus
    std::vector<int> unmatched_minus;                // ascending
    int unmatched_count() const { return static_cast<int>(unmatched_minus.size()); }
    /// Minimum number of independent external signals: one is always needed.
    int driver_count() const { return std::max(1, unmatched_count()); }
};

BipartiteGraph bipartite_representation(const StructuralNetwork& g);

/// Maximum-cardinality matching via Hopcroft-Karp. The seed shuffles edge
/// order so that alternative maximum matchings (and hence alternative driver
/// sets) are reachable; identical (graph, seed) gives identical output.
MatchingResult maximum_matching(const BipartiteGraph& b, std::uint64_t seed = 0);

/// Unmatched minus-side nodes; when everything is matched, the lowest node id
/// stands in as the single required input.
std::vector<int> driver_nodes(const MatchingResult& m);

}  // namespace ctrlchain
