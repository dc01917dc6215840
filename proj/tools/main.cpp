#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ctrlchain/errors.hpp"
#include "ctrlchain/gramian.hpp"
#include "ctrlchain/json_io.hpp"
#include "ctrlchain/lcc.hpp"
#include "ctrlchain/matching.hpp"
#include "ctrlchain/motifs.hpp"
#include "ctrlchain/net.hpp"
#include "ctrlchain/sweep.hpp"

namespace {

using ctrlchain::ordered_json;

constexpr const char* kVersion = "0.1.0";

// Node ids are 1-based everywhere on the command line and in files.
std::vector<int> parse_inputs(const std::string& list, int n) {
    std::vector<int> inputs;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ctrlchain::InvalidArgumentError("cannot parse input node: " + item);
        }
        if (pos != item.size()) {
            throw ctrlchain::InvalidArgumentError("cannot parse input node: " + item);
        }
        if (value < 1 || value > n) {
            throw ctrlchain::InvalidArgumentError("input node " + item + " out of range 1.." +
                                                  std::to_string(n));
        }
        inputs.push_back(value - 1);
    }
    if (inputs.empty()) throw ctrlchain::InvalidArgumentError("input list is empty");
    return inputs;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

struct IngestArgs {
    std::string matrix_path;
    double threshold = 0.0;
    std::string labels_path;
    std::string out_path;
    bool remove_isolated_flag = false;
    std::optional<double> hetero_r;
};

int run_ingest(const IngestArgs& args) {
    ctrlchain::WeightedAdjacency w = ctrlchain::load_matrix_file(args.matrix_path);
    ctrlchain::StructuralNetwork g = ctrlchain::threshold_binarize(w, args.threshold);
    g.set_source(args.matrix_path);
    if (!args.labels_path.empty()) {
        g.set_labels(ctrlchain::load_labels_file(args.labels_path));
    }

    const std::vector<int> isolated = ctrlchain::isolated_regions(g);
    ordered_json isolated_json = ordered_json::array();
    for (int v : isolated) {
        ordered_json entry;
        entry["node"] = v + 1;
        if (g.has_labels() && !g.label(v).empty()) entry["label"] = g.label(v);
        isolated_json.push_back(std::move(entry));
    }

    if (args.remove_isolated_flag && !isolated.empty()) {
        g = ctrlchain::remove_isolated(g).net;
    }
    const ctrlchain::NetworkStats stats = ctrlchain::network_stats(g, args.hetero_r);
    ctrlchain::write_network_json(args.out_path, g);

    ordered_json doc;
    doc["n"] = g.size();
    doc["links"] = stats.n_links_undirected;
    doc["isolated"] = std::move(isolated_json);
    doc["removed_isolated"] = args.remove_isolated_flag;
    doc["stats"] = ctrlchain::stats_to_json(stats, g);
    doc["out"] = args.out_path;
    emit(doc);
    return 0;
}

int run_drivers(const std::string& net_path, std::uint64_t seed) {
    ctrlchain::StructuralNetwork g = ctrlchain::read_network_json(net_path);
    ctrlchain::MatchingResult m =
        ctrlchain::maximum_matching(ctrlchain::bipartite_representation(g), seed);
    ordered_json doc;
    doc["matching_size"] = m.matched_edges.size();
    doc["n_u"] = m.unmatched_count();
    doc["n_i"] = m.driver_count();
    ordered_json drivers = ordered_json::array();
    for (int v : ctrlchain::driver_nodes(m)) drivers.push_back(v + 1);
    doc["drivers"] = std::move(drivers);
    emit(doc);
    return 0;
}

int run_gramian(const std::string& net_path, const std::string& inputs, double t_f,
                bool with_trace_inverse) {
    ctrlchain::StructuralNetwork g = ctrlchain::read_network_json(net_path);
    const std::vector<int> input_set = parse_inputs(inputs, g.size());
    ctrlchain::GramianResult res =
        ctrlchain::gramian(ctrlchain::control_system(g, input_set, t_f), with_trace_inverse);
    ordered_json doc;
    doc["trace"] = res.trace;
    doc["log10_trace"] = std::log10(res.trace);
    doc["lambda_min"] = res.lambda_min;
    doc["controllable"] = ctrlchain::controllability_check(res);
    doc["condition"] = res.condition_flag == ctrlchain::ConditionFlag::well_conditioned
                           ? "well_conditioned"
                           : "near_singular";
    if (with_trace_inverse) {
        if (res.trace_inverse) doc["trace_inverse"] = *res.trace_inverse;
        else doc["trace_inverse"] = nullptr;
    }
    emit(doc);
    return 0;
}

int run_lcc(const std::string& net_path, const std::string& inputs) {
    ctrlchain::StructuralNetwork g = ctrlchain::read_network_json(net_path);
    ctrlchain::LccReport report = ctrlchain::lcc_report(g, parse_inputs(inputs, g.size()));
    ordered_json doc;
    ordered_json in_json = ordered_json::array();
    for (int v : report.inputs) in_json.push_back(v + 1);
    doc["inputs"] = std::move(in_json);
    ordered_json dist = ordered_json::array();
    for (int d : report.dist) {
        if (d == ctrlchain::kUnreachable) dist.push_back(nullptr);
        else dist.push_back(d);
    }
    doc["distances"] = std::move(dist);
    if (report.lcc) doc["lcc"] = *report.lcc;
    else doc["lcc"] = nullptr;
    emit(doc);
    return 0;
}

int run_place(const std::string& net_path, int target_lcc, int samples, std::uint64_t seed,
              int threads, const std::string& out_path) {
    ctrlchain::StructuralNetwork g = ctrlchain::read_network_json(net_path);
    ctrlchain::PlacementResult result =
        ctrlchain::min_inputs_for_lcc(g, target_lcc, samples, seed, threads);
    ordered_json doc = ctrlchain::placement_to_json(result);
    if (!out_path.empty()) ctrlchain::write_json(out_path, doc);
    emit(doc);
    return 0;
}

int run_motifs(const std::string& net_path, const std::string& out_path) {
    ctrlchain::StructuralNetwork g = ctrlchain::read_network_json(net_path);
    ordered_json doc = ctrlchain::census_to_json(ctrlchain::triad_census(g));
    if (!out_path.empty()) ctrlchain::write_json(out_path, doc);
    emit(doc);
    return 0;
}

int run_sweep(const std::string& net_path, double t_f, int threads,
              const std::string& out_path) {
    ctrlchain::StructuralNetwork g = ctrlchain::read_network_json(net_path);
    auto records = ctrlchain::region_sweep(g, t_f, threads);
    ctrlchain::write_sweep_csv(out_path, records);
    const ctrlchain::SweepExtremes ex = ctrlchain::sweep_extremes(records);
    ordered_json doc;
    doc["rows"] = records.size();
    doc["max_trace_node"] = records[ex.argmax_trace].node + 1;
    doc["min_trace_node"] = records[ex.argmin_trace].node + 1;
    doc["out"] = out_path;
    emit(doc);
    return 0;
}

int run_report(const std::string& net_path, const std::string& sweep_path,
               const std::string& atlas_path, const std::vector<std::string>& placement_paths,
               std::optional<double> hetero_r, const std::string& out_path) {
    ctrlchain::StructuralNetwork g = ctrlchain::read_network_json(net_path);
    auto records = ctrlchain::read_sweep_csv(sweep_path);
    if (static_cast<int>(records.size()) != g.size()) {
        throw ctrlchain::InvalidArgumentError(
            "sweep has " + std::to_string(records.size()) + " rows but the network has " +
            std::to_string(g.size()) + " nodes");
    }
    const ctrlchain::NetworkStats stats = ctrlchain::network_stats(g, hetero_r);
    const ctrlchain::MotifCensus census = ctrlchain::triad_census(g);
    ctrlchain::AtlasMapping atlas = atlas_path.empty()
                                        ? ctrlchain::AtlasMapping::bundled()
                                        : ctrlchain::AtlasMapping::from_json_file(atlas_path);
    std::vector<ctrlchain::PlacementResult> placements;
    for (const auto& path : placement_paths) {
        placements.push_back(
            ctrlchain::placement_from_json(ctrlchain::read_json(path), g.size()));
    }
    ordered_json report =
        ctrlchain::build_report(g, stats, records, census, placements, atlas);
    ctrlchain::write_json(out_path, report);
    ordered_json doc;
    doc["out"] = out_path;
    emit(doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network controllability toolkit: driver nodes, Gramian control "
                 "energy, longest control chains, input placement, and triad motifs"};
    app.set_version_flag("--version", std::string("ctrlchain ") + kVersion);
    app.require_subcommand(1);

    IngestArgs ingest_args;
    double ingest_r = -1.0;
    auto* ingest = app.add_subcommand(
        "ingest", "Threshold and binarize a weighted matrix into a network JSON");
    ingest->add_option("--matrix", ingest_args.matrix_path, "Header-less CSV weight matrix")
        ->required();
    ingest->add_option("--threshold", ingest_args.threshold,
                       "Strict weight threshold; links need weight > threshold")
        ->required()
        ->check(CLI::NonNegativeNumber);
    ingest->add_option("--labels", ingest_args.labels_path,
                       "Region names, one per line, line k names node k");
    ingest->add_option("--out", ingest_args.out_path, "Output network JSON path")->required();
    ingest->add_flag("--remove-isolated", ingest_args.remove_isolated_flag,
                     "Drop isolated nodes and compact ids");
    ingest->add_option("--hetero-r", ingest_r,
                       "Heterogeneity constant r (default: the average degree c)")
        ->check(CLI::PositiveNumber);

    std::string net_path, inputs_list, out_path, sweep_path, atlas_path;
    std::vector<std::string> placement_paths;
    std::uint64_t seed = 0;
    double t_f = 1.0;
    bool trace_inverse = false;
    int target_lcc = 1, samples = 100, threads = 0;
    double report_r = -1.0;

    auto* drivers = app.add_subcommand("drivers", "Minimum driver nodes via maximum matching");
    drivers->add_option("--net", net_path, "Network JSON")->required();
    drivers->add_option("--seed", seed, "Tie-breaking seed (default 0)");

    auto* gramian = app.add_subcommand("gramian", "Control energy metrics for an input set");
    gramian->add_option("--net", net_path, "Network JSON")->required();
    gramian->add_option("--inputs", inputs_list, "Comma-separated input nodes, 1-based")
        ->required();
    gramian->add_option("--tf", t_f, "Control horizon (default 1.0)")
        ->check(CLI::PositiveNumber);
    gramian->add_flag("--trace-inverse", trace_inverse,
                      "Also report Trace(W^-1) when W is invertible");

    auto* lcc_cmd = app.add_subcommand("lcc", "Input distances and longest control chain");
    lcc_cmd->add_option("--net", net_path, "Network JSON")->required();
    lcc_cmd->add_option("--inputs", inputs_list, "Comma-separated input nodes, 1-based")
        ->required();

    auto* place = app.add_subcommand("place", "Minimum input sets reaching a target LCC");
    place->add_option("--net", net_path, "Network JSON")->required();
    place->add_option("--target-lcc", target_lcc, "Target LCC value")
        ->required()
        ->check(CLI::NonNegativeNumber);
    place->add_option("--samples", samples, "Randomized greedy samples (default 100)")
        ->check(CLI::PositiveNumber);
    place->add_option("--seed", seed, "Base seed; sample i uses seed+i (default 0)");
    place->add_option("--threads", threads, "Worker threads, 0 = auto")
        ->check(CLI::NonNegativeNumber);
    place->add_option("--out", out_path, "Also write the result JSON to this path");

    auto* motifs = app.add_subcommand("motifs", "Census of connected 3-node subgraphs");
    motifs->add_option("--net", net_path, "Network JSON")->required();
    motifs->add_option("--out", out_path, "Also write the census JSON to this path");

    auto* sweep = app.add_subcommand("sweep", "Per-region single-input energy sweep");
    sweep->add_option("--net", net_path, "Network JSON")->required();
    sweep->add_option("--tf", t_f, "Control horizon (default 1.0)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--threads", threads, "Worker threads, 0 = auto")
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--out", out_path, "Output sweep CSV path")->required();

    auto* report = app.add_subcommand("report", "Combined analysis report JSON");
    report->add_option("--net", net_path, "Network JSON")->required();
    report->add_option("--sweep", sweep_path, "Sweep CSV from the sweep subcommand")
        ->required();
    report->add_option("--atlas", atlas_path, "Atlas JSON {system: [region, ...]}");
    report->add_option("--placements", placement_paths,
                       "Placement JSON files from the place subcommand");
    report->add_option("--hetero-r", report_r,
                       "Heterogeneity constant r (default: the average degree c)")
        ->check(CLI::PositiveNumber);
    report->add_option("--out", out_path, "Output report JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ingest->parsed()) {
            if (ingest_r > 0.0) ingest_args.hetero_r = ingest_r;
            return run_ingest(ingest_args);
        }
        if (drivers->parsed()) return run_drivers(net_path, seed);
        if (gramian->parsed()) return run_gramian(net_path, inputs_list, t_f, trace_inverse);
        if (lcc_cmd->parsed()) return run_lcc(net_path, inputs_list);
        if (place->parsed()) {
            return run_place(net_path, target_lcc, samples, seed, threads, out_path);
        }
        if (motifs->parsed()) return run_motifs(net_path, out_path);
        if (sweep->parsed()) return run_sweep(net_path, t_f, threads, out_path);
        if (report->parsed()) {
            std::optional<double> r;
            if (report_r > 0.0) r = report_r;
            return run_report(net_path, sweep_path, atlas_path, placement_paths, r, out_path);
        }
    } catch (const ctrlchain::Error& e) {
        ordered_json err;
        err["error"] = e.kind();
        err["detail"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = "error";
        err["detail"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
