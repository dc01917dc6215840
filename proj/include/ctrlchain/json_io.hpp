#pragma once

#include <json.hpp>
#include <optional>
#include <span>
#include <string>

#include "ctrlchain/lcc.hpp"
#include "ctrlchain/motifs.hpp"
#include "ctrlchain/net.hpp"
#include "ctrlchain/sweep.hpp"

namespace ctrlchain {

using ordered_json = nlohmann::ordered_json;

/// Network JSON: {"n", "links", "labels", "threshold", "source"} with
/// undirected pairs i<j (1-based). Genuinely directed networks additionally
/// carry "directed": true and list ordered pairs instead.
ordered_json network_to_json(const StructuralNetwork& g);
StructuralNetwork network_from_json(const ordered_json& doc);

void write_network_json(const std::string& path, const StructuralNetwork& g);
StructuralNetwork read_network_json(const std::string& path);

ordered_json stats_to_json(const NetworkStats& stats, const StructuralNetwork& g);
ordered_json census_to_json(const MotifCensus& census);
ordered_json placement_to_json(const PlacementResult& placement);
PlacementResult placement_from_json(const ordered_json& doc, int n_nodes);

/// Full analysis report: network summary, stats, sweep extremes, class
/// counts, per-class LCC histograms, cognitive-system breakdown, census, and
/// any placement summaries.
ordered_json build_report(const StructuralNetwork& g, const NetworkStats& stats,
                          std::span<const RegionSweepRecord> records,
                          const MotifCensus& census,
                          std::span<const PlacementResult> placements,
                          const AtlasMapping& atlas);

/// Writes <dir>/sweep.csv and <dir>/report.json.
void export_report(const StructuralNetwork& g, const NetworkStats& stats,
                   std::span<const RegionSweepRecord> records, const MotifCensus& census,
                   std::span<const PlacementResult> placements, const AtlasMapping& atlas,
                   const std::string& dir);

void write_json(const std::string& path, const ordered_json& doc);
ordered_json read_json(const std::string& path);

}  // namespace ctrlchain
