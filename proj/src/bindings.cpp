#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ctrlchain/errors.hpp"
#include "ctrlchain/gramian.hpp"
#include "ctrlchain/json_io.hpp"
#include "ctrlchain/lcc.hpp"
#include "ctrlchain/matching.hpp"
#include "ctrlchain/motifs.hpp"
#include "ctrlchain/net.hpp"
#include "ctrlchain/sweep.hpp"

namespace py = pybind11;
using namespace ctrlchain;

namespace {

// Node ids cross the python boundary 1-based, matching the CLI and file
// formats.
std::vector<int> to_internal(const std::vector<int>& nodes, int n) {
    std::vector<int> out;
    out.reserve(nodes.size());
    for (int v : nodes) {
        if (v < 1 || v > n) {
            throw InvalidArgumentError("node " + std::to_string(v) + " out of range 1.." +
                                       std::to_string(n));
        }
        out.push_back(v - 1);
    }
    return out;
}

std::vector<int> to_external(const std::vector<int>& nodes) {
    std::vector<int> out;
    out.reserve(nodes.size());
    for (int v : nodes) out.push_back(v + 1);
    return out;
}

py::dict gramian_to_dict(const GramianResult& res, bool with_matrix) {
    py::dict d;
    d["trace"] = res.trace;
    d["log10_trace"] = std::log10(res.trace);
    d["lambda_min"] = res.lambda_min;
    d["controllable"] = controllability_check(res);
    d["condition"] = res.condition_flag == ConditionFlag::well_conditioned
                         ? "well_conditioned"
                         : "near_singular";
    if (res.trace_inverse) d["trace_inverse"] = *res.trace_inverse;
    else d["trace_inverse"] = py::none();
    if (with_matrix) d["w"] = res.w;
    return d;
}

py::dict record_to_dict(const RegionSweepRecord& rec) {
    py::dict d;
    d["node"] = rec.node + 1;
    d["label"] = rec.label;
    d["degree"] = rec.degree;
    d["trace"] = rec.trace;
    d["log10_trace"] = rec.log10_trace;
    d["lambda_min"] = rec.lambda_min;
    d["controllable"] = rec.controllable;
    if (rec.lcc >= 0) d["lcc"] = rec.lcc;
    else d["lcc"] = py::none();
    d["energy_class"] = to_string(rec.energy_class);
    return d;
}

}  // namespace

PYBIND11_MODULE(_ctrlchain, m) {
    m.doc() = "Network controllability: driver nodes, Gramian control energy, "
              "longest control chains, input placement, and triad motifs";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "CtrlchainError", PyExc_ValueError);

    py::class_<StructuralNetwork>(m, "Network",
                                  "Directed network over nodes 1..n with optional labels")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& links,
                         const std::vector<std::string>& labels) {
                 std::vector<std::pair<int, int>> internal;
                 internal.reserve(links.size());
                 for (const auto& [a, b] : links) internal.emplace_back(a - 1, b - 1);
                 return StructuralNetwork(n, internal, labels);
             }),
             py::arg("n"), py::arg("links"), py::arg("labels") = std::vector<std::string>{},
             "Build from directed links given as 1-based (from, to) pairs")
        .def_property_readonly("n", &StructuralNetwork::size)
        .def("links",
             [](const StructuralNetwork& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const auto& [a, b] : g.links()) out.emplace_back(a + 1, b + 1);
                 return out;
             })
        .def("labels", [](const StructuralNetwork& g) { return g.labels(); })
        .def("degree", [](const StructuralNetwork& g, int v) { return g.degree(v - 1); },
             py::arg("node"))
        .def("is_symmetric", &StructuralNetwork::is_symmetric)
        .def("to_json", [](const StructuralNetwork& g) { return network_to_json(g).dump(2); })
        .def_static("from_json",
                     [](const std::string& text) {
                         return network_from_json(ordered_json::parse(text));
                     },
                     py::arg("text"))
        .def("__repr__", [](const StructuralNetwork& g) {
            return "<Network n=" + std::to_string(g.size()) + " links=" +
                   std::to_string(g.link_count()) + ">";
        });

    m.def("load_matrix",
          [](const std::string& path) { return load_matrix_file(path).matrix(); },
          py::arg("path"), "Load a header-less CSV weight matrix (diagonal zeroed)");

    m.def("threshold_binarize",
          [](const Eigen::MatrixXd& w, double theta) {
              return threshold_binarize(WeightedAdjacency(w), theta);
          },
          py::arg("weights"), py::arg("threshold"),
          "Keep links with weight strictly above the threshold, bidirected");

    m.def("isolated_regions",
          [](const StructuralNetwork& g) { return to_external(isolated_regions(g)); },
          py::arg("net"));

    m.def("remove_isolated",
          [](const StructuralNetwork& g) {
              RemovalResult r = remove_isolated(g);
              py::dict remap;
              for (size_t v = 0; v < r.old_to_new.size(); ++v) {
                  if (r.old_to_new[v] >= 0) {
                      remap[py::int_(v + 1)] = r.old_to_new[v] + 1;
                  }
              }
              return py::make_tuple(std::move(r.net), std::move(remap));
          },
          py::arg("net"), "Returns (network, old-to-new id mapping)");

    m.def("network_stats",
          [](const StructuralNetwork& g, std::optional<double> r) {
              NetworkStats s = network_stats(g, r);
              py::dict d;
              d["n_nodes"] = s.n_nodes;
              d["n_links"] = s.n_links_undirected;
              d["isolated"] = to_external(s.isolated);
              d["heterogeneity"] = s.heterogeneity;
              d["hetero_r"] = s.hetero_r;
              d["avg_degree"] = s.avg_degree;
              d["k_min"] = s.k_min;
              d["k_max"] = s.k_max;
              d["avg_distance"] = s.avg_distance;
              return d;
          },
          py::arg("net"), py::arg("r") = py::none());

    m.def("drivers",
          [](const StructuralNetwork& g, std::uint64_t seed) {
              MatchingResult res = maximum_matching(bipartite_representation(g), seed);
              py::dict d;
              d["matching_size"] = res.matched_edges.size();
              d["n_u"] = res.unmatched_count();
              d["n_i"] = res.driver_count();
              d["drivers"] = to_external(driver_nodes(res));
              std::vector<std::pair<int, int>> matched;
              for (const auto& [u, v] : res.matched_edges) matched.emplace_back(u + 1, v + 1);
              d["matched_edges"] = matched;
              return d;
          },
          py::arg("net"), py::arg("seed") = 0,
          "Maximum matching: unmatched count, driver count, and a driver set");

    m.def("matrix_exponential", &matrix_exponential, py::arg("m"));

    m.def("gramian",
          [](const StructuralNetwork& g, const std::vector<int>& inputs, double t_f,
             bool trace_inverse, bool with_matrix) {
              GramianResult res = gramian(
                  control_system(g, to_internal(inputs, g.size()), t_f), trace_inverse);
              return gramian_to_dict(res, with_matrix);
          },
          py::arg("net"), py::arg("inputs"), py::arg("t_f") = 1.0,
          py::arg("trace_inverse") = false, py::arg("with_matrix") = false);

    m.def("gramian_from_matrix",
          [](const Eigen::MatrixXd& a, const std::vector<int>& inputs, double t_f,
             bool trace_inverse, bool with_matrix) {
              GramianResult res = gramian(
                  ControlSystem(a, to_internal(inputs, static_cast<int>(a.rows())), t_f),
                  trace_inverse);
              return gramian_to_dict(res, with_matrix);
          },
          py::arg("a"), py::arg("inputs"), py::arg("t_f") = 1.0,
          py::arg("trace_inverse") = false, py::arg("with_matrix") = false,
          "Gramian for an explicit system matrix (inputs still 1-based)");

    m.def("input_distances",
          [](const StructuralNetwork& g, const std::vector<int>& inputs) {
              std::vector<std::optional<int>> out;
              for (int d : input_distances(g, to_internal(inputs, g.size()))) {
                  if (d == kUnreachable) out.emplace_back(std::nullopt);
                  else out.emplace_back(d);
              }
              return out;
          },
          py::arg("net"), py::arg("inputs"));

    m.def("lcc",
          [](const StructuralNetwork& g, const std::vector<int>& inputs) {
              return lcc(g, to_internal(inputs, g.size()));
          },
          py::arg("net"), py::arg("inputs"),
          "Longest control chain, or None when some node is unreachable");

    m.def("lcc_spectrum",
          [](const StructuralNetwork& g) {
              LccSpectrum s = single_input_lcc_spectrum(g);
              py::dict d;
              d["per_node"] = s.per_node;
              d["lcc_min"] = s.lcc_min;
              d["lcc_max"] = s.lcc_max;
              return d;
          },
          py::arg("net"));

    m.def("min_inputs_for_lcc",
          [](const StructuralNetwork& g, int k, int samples, std::uint64_t seed, int threads) {
              PlacementResult r = min_inputs_for_lcc(g, k, samples, seed, threads);
              py::dict d;
              d["target_lcc"] = r.target_k;
              d["best_size"] = r.best_size;
              py::list solutions;
              for (const auto& sol : r.solutions) {
                  py::dict s;
                  s["inputs"] = to_external(sol.input_set);
                  s["sample_seed"] = sol.sample_seed;
                  solutions.append(std::move(s));
              }
              d["solutions"] = std::move(solutions);
              py::dict participation;
              for (size_t v = 0; v < r.participation.size(); ++v) {
                  if (r.participation[v] > 0.0) {
                      participation[py::int_(v + 1)] = r.participation[v];
                  }
              }
              d["participation"] = std::move(participation);
              return d;
          },
          py::arg("net"), py::arg("target_lcc"), py::arg("samples") = 100,
          py::arg("seed") = 0, py::arg("threads") = 1);

    m.def("triad_census",
          [](const StructuralNetwork& g) {
              MotifCensus c = triad_census(g);
              py::dict counts;
              for (const auto& [id, count] : c.counts) counts[py::int_(id)] = count;
              py::dict d;
              d["counts"] = std::move(counts);
              d["n_m"] = c.n_m;
              return d;
          },
          py::arg("net"), "Counts of induced connected 3-node subgraph classes");

    m.def("region_sweep",
          [](const StructuralNetwork& g, double t_f, int threads) {
              py::list out;
              for (const auto& rec : region_sweep(g, t_f, threads)) {
                  out.append(record_to_dict(rec));
              }
              return out;
          },
          py::arg("net"), py::arg("t_f") = 1.0, py::arg("threads") = 0,
          "One record per region as the single input");

    m.def("classify_energy",
          [](double trace) { return std::string(to_string(classify_energy(trace))); },
          py::arg("trace"));
}
