#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctrlchain/net.hpp"

namespace ctrlchain {

/// Marker for nodes no input can reach.
inline constexpr int kUnreachable = -1;

/// Multi-source BFS distance from the nearest input along directed links;
/// kUnreachable where no input reaches.
std::vector<int> input_distances(const StructuralNetwork& g, const std::vector<int>& inputs);

/// Longest control chain: the largest input distance, or nullopt when some
/// node is unreachable.
std::optional<int> lcc(const StructuralNetwork& g, const std::vector<int>& inputs);

struct LccReport {
    std::vector<int> inputs;
    std::vector<int> dist;       // per node, kUnreachable for unreachable
    std::optional<int> lcc;
};

LccReport lcc_report(const StructuralNetwork& g, const std::vector<int>& inputs);

struct LccSpectrum {
    std::vector<std::optional<int>> per_node;  // lcc({v}) for each v
    std::optional<int> lcc_min;
    std::optional<int> lcc_max;
};

/// Directed eccentricity of every node as a single input; min/max over nodes
/// with finite eccentricity.
LccSpectrum single_input_lcc_spectrum(const StructuralNetwork& g);

struct PlacementSolution {
    int target_k = 0;
    std::vector<int> input_set;  // ascending
    std::uint64_t sample_seed = 0;
    int size() const { return static_cast<int>(input_set.size()); }
};

struct PlacementResult {
    int target_k = 0;
    int best_size = 0;
    std::vector<PlacementSolution> solutions;  // minimum-size only, sorted
    std::vector<double> participation;         // per node, over retained solutions
};

/// Smallest input sets found with LCC <= k: each sample runs a randomized
/// greedy distance-k dominating set (per-sample seed = seed + sample index),
/// only minimum-size solutions are retained, and participation is the
/// fraction of retained solutions containing each node. Nodes nothing else
/// can cover are forced into every set. Every solution is re-checked against
/// lcc() before being returned.
PlacementResult min_inputs_for_lcc(const StructuralNetwork& g, int k, int samples,
                                   std::uint64_t seed, int threads = 1);

}  // namespace ctrlchain
