#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctrlchain/net.hpp"
#include "ctrlchain/sweep_record.hpp"

namespace ctrlchain {

/// Reciprocal open wedge a<->b<->c.
inline constexpr int kMotifWedge = 78;
/// Fully reciprocal triangle.
inline constexpr int kMotifTriangle = 238;

/// Census of induced, weakly connected 3-node subgraphs. Class ids encode the
/// 3x3 adjacency matrix read row-major as a 9-bit number, minimized over node
/// permutations (the connected classes are 6, 12, 14, 36, 38, 46, 74, 78, 98,
/// 102, 108, 110, 238).
struct MotifCensus {
    std::map<int, long long> counts;
    long long n_m = 0;  // counts[78] + counts[238]
    long long connected_triples() const;
};

MotifCensus triad_census(const StructuralNetwork& g);

/// Canonical class id for a triple's 6 possible directed edges, given as
/// flags for (0->1, 1->0, 0->2, 2->0, 1->2, 2->1).
int triad_class_id(const std::array<bool, 6>& edges);

struct MotifEnergyRow {
    std::string network;
    long long n_m = 0;
    std::optional<double> mean_energy_lcc3;  // mean trace over regions with LCC 3
    std::optional<double> mean_energy_lcc5;  // absent when max single-input LCC < 5
    double mean_energy = 0.0;
};

/// Cross-network table sorted by motif count, descending. Network ids must
/// match between the two inputs.
std::vector<MotifEnergyRow> motif_energy_table(
    const std::map<std::string, MotifCensus>& censuses,
    const std::map<std::string, std::vector<RegionSweepRecord>>& sweeps);

}  // namespace ctrlchain
