#include "ctrlchain/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "ctrlchain/errors.hpp"

namespace ctrlchain {

ordered_json network_to_json(const StructuralNetwork& g) {
    ordered_json doc;
    doc["n"] = g.size();
    const bool symmetric = g.is_symmetric();
    if (!symmetric) doc["directed"] = true;
    ordered_json links = ordered_json::array();
    for (const auto& [from, to] : g.links()) {
        if (symmetric && from > to) continue;  // each undirected pair once, i < j
        links.push_back({from + 1, to + 1});
    }
    doc["links"] = std::move(links);
    ordered_json labels = ordered_json::array();
    for (const auto& label : g.labels()) labels.push_back(label);
    doc["labels"] = std::move(labels);
    if (g.threshold()) doc["threshold"] = *g.threshold();
    else doc["threshold"] = nullptr;
    doc["source"] = g.source();
    return doc;
}

StructuralNetwork network_from_json(const ordered_json& doc) {
    if (!doc.contains("n") || !doc.contains("links")) {
        throw InvalidArgumentError("network JSON needs \"n\" and \"links\" fields");
    }
    const int n = doc.at("n").get<int>();
    const bool directed = doc.value("directed", false);
    std::vector<std::pair<int, int>> links;
    for (const auto& pair : doc.at("links")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw InvalidArgumentError("network JSON links must be [i, j] pairs");
        }
        int i = pair[0].get<int>() - 1;
        int j = pair[1].get<int>() - 1;
        links.emplace_back(i, j);
        if (!directed) links.emplace_back(j, i);
    }
    std::vector<std::string> labels;
    if (doc.contains("labels") && doc.at("labels").is_array()) {
        for (const auto& label : doc.at("labels")) labels.push_back(label.get<std::string>());
    }
    StructuralNetwork g(n, links, std::move(labels));
    if (doc.contains("threshold") && doc.at("threshold").is_number()) {
        g.set_threshold(doc.at("threshold").get<double>());
    }
    if (doc.contains("source") && doc.at("source").is_string()) {
        g.set_source(doc.at("source").get<std::string>());
    }
    return g;
}

void write_network_json(const std::string& path, const StructuralNetwork& g) {
    write_json(path, network_to_json(g));
}

StructuralNetwork read_network_json(const std::string& path) {
    return network_from_json(read_json(path));
}

ordered_json stats_to_json(const NetworkStats& stats, const StructuralNetwork& g) {
    ordered_json doc;
    doc["n_nodes"] = stats.n_nodes;
    doc["n_links"] = stats.n_links_undirected;
    ordered_json isolated = ordered_json::array();
    for (int v : stats.isolated) {
        if (g.has_labels() && !g.label(v).empty()) {
            isolated.push_back(ordered_json{{"node", v + 1}, {"label", g.label(v)}});
        } else {
            isolated.push_back(ordered_json{{"node", v + 1}});
        }
    }
    doc["isolated"] = std::move(isolated);
    doc["heterogeneity"] = stats.heterogeneity;
    doc["hetero_r"] = stats.hetero_r;
    doc["avg_degree"] = stats.avg_degree;
    doc["k_min"] = stats.k_min;
    doc["k_max"] = stats.k_max;
    doc["avg_distance"] = stats.avg_distance;
    return doc;
}

ordered_json census_to_json(const MotifCensus& census) {
    ordered_json counts = ordered_json::object();
    for (const auto& [id, count] : census.counts) counts[std::to_string(id)] = count;
    ordered_json doc;
    doc["counts"] = std::move(counts);
    doc["n_m"] = census.n_m;
    return doc;
}

ordered_json placement_to_json(const PlacementResult& placement) {
    ordered_json doc;
    doc["target_lcc"] = placement.target_k;
    doc["best_size"] = placement.best_size;
    ordered_json solutions = ordered_json::array();
    for (const auto& sol : placement.solutions) {
        ordered_json inputs = ordered_json::array();
        for (int v : sol.input_set) inputs.push_back(v + 1);
        solutions.push_back(ordered_json{{"inputs", std::move(inputs)},
                                         {"sample_seed", sol.sample_seed}});
    }
    doc["solutions"] = std::move(solutions);
    ordered_json participation = ordered_json::object();
    for (size_t v = 0; v < placement.participation.size(); ++v) {
        if (placement.participation[v] > 0.0) {
            participation[std::to_string(v + 1)] = placement.participation[v];
        }
    }
    doc["participation"] = std::move(participation);
    return doc;
}

PlacementResult placement_from_json(const ordered_json& doc, int n_nodes) {
    PlacementResult placement;
    placement.target_k = doc.at("target_lcc").get<int>();
    placement.best_size = doc.at("best_size").get<int>();
    for (const auto& sol : doc.at("solutions")) {
        PlacementSolution s;
        s.target_k = placement.target_k;
        for (const auto& v : sol.at("inputs")) s.input_set.push_back(v.get<int>() - 1);
        s.sample_seed = sol.at("sample_seed").get<std::uint64_t>();
        placement.solutions.push_back(std::move(s));
    }
    placement.participation.assign(n_nodes, 0.0);
    if (doc.contains("participation")) {
        for (const auto& [key, value] : doc.at("participation").items()) {
            int v = std::stoi(key) - 1;
            if (v >= 0 && v < n_nodes) placement.participation[v] = value.get<double>();
        }
    }
    return placement;
}

namespace {

ordered_json record_summary(const RegionSweepRecord& rec) {
    ordered_json doc;
    doc["node"] = rec.node + 1;
    doc["label"] = rec.label;
    doc["degree"] = rec.degree;
    doc["trace"] = rec.trace;
    doc["log10_trace"] = rec.log10_trace;
    doc["lcc"] = rec.lcc;
    doc["class"] = to_string(rec.energy_class);
    return doc;
}

ordered_json histogram_to_json(const std::map<int, int>& histogram) {
    ordered_json doc = ordered_json::object();
    for (const auto& [lcc_value, count] : histogram) doc[std::to_string(lcc_value)] = count;
    return doc;
}

}  // namespace

ordered_json build_report(const StructuralNetwork& g, const NetworkStats& stats,
                          std::span<const RegionSweepRecord> records,
                          const MotifCensus& census,
                          std::span<const PlacementResult> placements,
                          const AtlasMapping& atlas) {
    ordered_json doc;
    ordered_json network;
    network["n"] = g.size();
    network["links"] = g.undirected_link_count();
    if (g.threshold()) network["threshold"] = *g.threshold();
    else network["threshold"] = nullptr;
    network["source"] = g.source();
    doc["network"] = std::move(network);
    doc["stats"] = stats_to_json(stats, g);

    const SweepExtremes extremes = sweep_extremes(records);
    ordered_json ext;
    ext["max_trace"] = record_summary(records[extremes.argmax_trace]);
    ext["min_trace"] = record_summary(records[extremes.argmin_trace]);
    doc["extremes"] = std::move(ext);

    int n_low = 0, n_high = 0, n_other = 0;
    for (const auto& rec : records) {
        if (rec.energy_class == EnergyClass::low_energy) ++n_low;
        else if (rec.energy_class == EnergyClass::high_energy) ++n_high;
        else ++n_other;
    }
    doc["energy_classes"] = ordered_json{{"low_energy", n_low},
                                         {"high_energy", n_high},
                                         {"unclassified", n_other}};
    ordered_json histograms;
    histograms["low_energy"] = histogram_to_json(
        lcc_energy_histogram(records, EnergyClass::low_energy));
    histograms["high_energy"] = histogram_to_json(
        lcc_energy_histogram(records, EnergyClass::high_energy));
    doc["lcc_histograms"] = std::move(histograms);

    const SystemBreakdown breakdown = system_lcc_breakdown(records, atlas);
    ordered_json systems = ordered_json::object();
    for (const auto& [system, histogram] : breakdown.histograms) {
        ordered_json entry;
        entry["lcc"] = histogram_to_json(histogram);
        ordered_json unresolved = ordered_json::array();
        auto it = breakdown.unresolved.find(system);
        if (it != breakdown.unresolved.end()) {
            for (const auto& name : it->second) unresolved.push_back(name);
        }
        entry["unresolved"] = std::move(unresolved);
        systems[system] = std::move(entry);
    }
    doc["systems"] = std::move(systems);
    doc["census"] = census_to_json(census);

    ordered_json placement_list = ordered_json::array();
    for (const auto& placement : placements) {
        placement_list.push_back(placement_to_json(placement));
    }
    doc["placements"] = std::move(placement_list);
    return doc;
}

void export_report(const StructuralNetwork& g, const NetworkStats& stats,
                   std::span<const RegionSweepRecord> records, const MotifCensus& census,
                   std::span<const PlacementResult> placements, const AtlasMapping& atlas,
                   const std::string& dir) {
    write_sweep_csv(dir + "/sweep.csv", records);
    write_json(dir + "/report.json", build_report(g, stats, records, census, placements, atlas));
}

void write_json(const std::string& path, const ordered_json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot open for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw IoError(path, "failed writing JSON");
}

ordered_json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open JSON file");
    ordered_json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path, std::string("invalid JSON: ") + e.what());
    }
    return doc;
}

}  // namespace ctrlchain
