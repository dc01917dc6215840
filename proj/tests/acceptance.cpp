// Acceptance suite: one self-contained check per criterion, each printing a
// single PASS/FAIL line. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
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
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ctrlchain;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double rel_frobenius(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const double scale = std::max(a.norm(), b.norm());
    return scale == 0.0 ? 0.0 : (a - b).norm() / scale;
}

StructuralNetwork chain_example() {
    return StructuralNetwork(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
}

// ---------------------------------------------------------------------------
// 1. Worked 5-node example: distances, LCCs, matching alternatives, energy gap.
bool criterion_1(std::string& detail) {
    const auto start = Clock::now();
    StructuralNetwork g = chain_example();
    bool ok = true;

    ok &= input_distances(g, {0, 2}) == std::vector<int>{0, 1, 0, 2, 3};
    ok &= lcc(g, {0, 2}) == 3;
    ok &= input_distances(g, {0, 3}) == std::vector<int>{0, 1, 2, 0, 1};
    ok &= lcc(g, {0, 3}) == 2;

    BipartiteGraph b = bipartite_representation(g);
    std::set<std::vector<int>> driver_sets;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        MatchingResult m = maximum_matching(b, seed);
        ok &= m.matched_edges.size() == 3;
        ok &= m.unmatched_count() == 2;
        driver_sets.insert(driver_nodes(m));
    }
    ok &= driver_sets.count({0, 2}) == 1;
    ok &= driver_sets.count({0, 3}) == 1;

    GramianResult far = gramian(control_system(g, {0, 2}, 1.0), true);
    GramianResult near = gramian(control_system(g, {0, 3}, 1.0), true);
    double ratio = 0.0;
    if (far.trace_inverse && near.trace_inverse) {
        ratio = *far.trace_inverse / *near.trace_inverse;
    }
    ok &= ratio >= 50.0;

    const double elapsed = seconds_since(start);
    ok &= elapsed < 1.0;
    std::ostringstream oss;
    oss << "driver sets {1,3},{1,4} both seen; trace-inverse ratio " << ratio << "; "
        << elapsed << " s";
    detail = oss.str();
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Block-exponential Gramian against quadrature and the spectral form.
bool criterion_2(std::string& detail) {
    std::mt19937_64 rng(202);
    double worst_quad = 0.0, worst_spectral = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 19);
        StructuralNetwork g = testsupport::er_bidirected(n, 3.0, rng());
        std::vector<int> inputs;
        const int n_inputs = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(inputs.size()) < std::min(n_inputs, n)) {
            int v = static_cast<int>(rng() % n);
            if (std::find(inputs.begin(), inputs.end(), v) == inputs.end()) inputs.push_back(v);
        }
        ControlSystem sys = control_system(g, inputs, 1.0);
        GramianResult res = gramian(sys);
        worst_quad = std::max(worst_quad, rel_frobenius(res.w, gramian_quadrature(sys, 96)));
        worst_spectral = std::max(
            worst_spectral,
            rel_frobenius(res.w, testsupport::spectral_gramian(sys.a(), inputs, 1.0)));
    }
    GramianResult scalar = gramian(ControlSystem(Eigen::MatrixXd::Constant(1, 1, 1.0), {0}, 1.0));
    const double scalar_err = std::abs(scalar.trace - (std::exp(2.0) - 1.0) / 2.0);

    std::ostringstream oss;
    oss << "max rel err: quadrature " << worst_quad << ", spectral " << worst_spectral
        << ", scalar " << scalar_err;
    detail = oss.str();
    return worst_quad <= 1e-8 && worst_spectral <= 1e-10 && scalar_err <= 1e-12;
}

// ---------------------------------------------------------------------------
// 3. Matching cardinality equals exhaustive search on 500 small digraphs.
bool criterion_3(std::string& detail) {
    std::mt19937_64 rng(303);
    int agreements = 0;
    bool identity_ok = true;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const double p = 0.05 + 0.55 * testsupport::rand_unit(rng);
        StructuralNetwork g = testsupport::random_digraph(n, p, rng());
        BipartiteGraph b = bipartite_representation(g);
        MatchingResult m = maximum_matching(b, rng());
        if (static_cast<int>(m.matched_edges.size()) == testsupport::exhaustive_max_matching(b)) {
            ++agreements;
        }
        identity_ok &= m.driver_count() == std::max(1, m.unmatched_count());
    }
    std::ostringstream oss;
    oss << agreements << "/500 equal to exhaustive; driver-count identity "
        << (identity_ok ? "held" : "violated");
    detail = oss.str();
    return agreements == 500 && identity_ok;
}

// ---------------------------------------------------------------------------
// 4. Dense bidirected networks: perfect matching, and no single-input Gramian
//    contradicts controllability at the relative tolerance (lambda_min of
//    these Gramians sits at the eigensolver noise floor, so the meaningful
//    sanity check is that it is not measurably below zero).
bool criterion_4(std::string& detail) {
    int seeds_ok = 0;
    double worst_rel = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        StructuralNetwork g = testsupport::er_bidirected(90, 12.0, 400 + seed);
        if (!isolated_regions(g).empty()) g = remove_isolated(g).net;
        const int n = g.size();
        bool ok = true;

        MatchingResult m = maximum_matching(bipartite_representation(g), seed);
        ok &= m.unmatched_count() == 0;

        for (int v = 0; v < n && ok; ++v) {
            const auto dist = input_distances(g, {v});
            for (int d : dist) ok &= d != kUnreachable;
            GramianResult res = gramian(control_system(g, {v}, 1.0));
            const double floor = 1e-12 * std::max(1.0, res.trace / n);
            ok &= res.lambda_min >= -floor;
            if (res.trace > 0.0) {
                worst_rel = std::min(worst_rel, res.lambda_min / (res.trace / n));
            }
        }
        if (ok) ++seeds_ok;
    }
    std::ostringstream oss;
    oss << seeds_ok << "/20 seeds fully matched with all single-input Gramians PSD at "
        << "tolerance (worst lambda_min/(trace/N) = " << worst_rel << ")";
    detail = oss.str();
    return seeds_ok >= 19;
}

// ---------------------------------------------------------------------------
// 5. Randomized greedy placement against exhaustive distance-k domination.
bool criterion_5(std::string& detail) {
    const auto start = Clock::now();
    std::mt19937_64 rng(505);
    int equal = 0;
    bool never_below = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        StructuralNetwork g = testsupport::er_bidirected(n, 2.5, rng());
        const int k = 1 + (trial % 2);
        PlacementResult r = min_inputs_for_lcc(g, k, 100, rng());
        const int exact = testsupport::exhaustive_min_dominating(g, k);
        if (r.best_size < exact) never_below = false;
        if (r.best_size == exact) ++equal;
    }
    std::vector<std::pair<int, int>> c5_links;
    for (int i = 0; i < 5; ++i) {
        c5_links.emplace_back(i, (i + 1) % 5);
        c5_links.emplace_back((i + 1) % 5, i);
    }
    PlacementResult c5 = min_inputs_for_lcc(StructuralNetwork(5, c5_links), 1, 100, 0);
    const double elapsed = seconds_since(start);

    std::ostringstream oss;
    oss << equal << "/200 equal to exhaustive, never below: " << (never_below ? "yes" : "NO")
        << ", C5@k=1 -> " << c5.best_size << ", " << elapsed << " s";
    detail = oss.str();
    return equal >= 190 && never_below && c5.best_size == 2 && elapsed < 60.0;
}

// ---------------------------------------------------------------------------
// 6. Triad census equals brute-force classification; closed forms on
//    symmetric graphs.
bool criterion_6(std::string& detail) {
    std::mt19937_64 rng(606);
    int census_ok = 0;
    bool symmetric_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 28);
        const bool symmetric = trial % 2 == 0;
        StructuralNetwork g =
            symmetric ? testsupport::er_bidirected(n, 3.5, rng())
                      : testsupport::random_digraph(n, 0.15 + 0.2 * testsupport::rand_unit(rng),
                                                    rng());
        MotifCensus census = triad_census(g);
        if (census.counts == testsupport::brute_triad_census(g)) ++census_ok;
        if (symmetric) {
            for (const auto& [id, count] : census.counts) {
                symmetric_ok &= id == kMotifWedge || id == kMotifTriangle;
            }
            const long long triangles = testsupport::undirected_triangle_count(g);
            long long wedges = 0;
            for (int v = 0; v < n; ++v) {
                const long long d = g.degree(v);
                wedges += d * (d - 1) / 2;
            }
            wedges -= 3 * triangles;
            const long long got_t =
                census.counts.count(kMotifTriangle) ? census.counts.at(kMotifTriangle) : 0;
            const long long got_w =
                census.counts.count(kMotifWedge) ? census.counts.at(kMotifWedge) : 0;
            symmetric_ok &= got_t == triangles && got_w == wedges;
        }
    }
    std::ostringstream oss;
    oss << census_ok << "/100 equal to brute force; symmetric closed forms "
        << (symmetric_ok ? "held" : "violated");
    detail = oss.str();
    return census_ok == 100 && symmetric_ok;
}

// ---------------------------------------------------------------------------
// 7. LCC against control energy on scale-free style networks.
bool criterion_7(std::string& detail) {
    const auto start = Clock::now();
    int rho_pass = 0, argmax_pass = 0;
    double worst_rho = -1.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        StructuralNetwork g = testsupport::pa_bidirected(90, 6, 1.75, 8, seed);
        std::vector<double> traces(g.size());
        for (int v = 0; v < g.size(); ++v) {
            traces[v] = gramian(control_system(g, {v}, 1.0)).trace;
        }
        LccSpectrum spectrum = single_input_lcc_spectrum(g);
        std::vector<double> lccs, log_traces;
        int argmax = 0;
        for (int v = 0; v < g.size(); ++v) {
            lccs.push_back(static_cast<double>(*spectrum.per_node[v]));
            log_traces.push_back(std::log10(traces[v]));
            if (traces[v] > traces[argmax]) argmax = v;
        }
        const double rho = testsupport::spearman(lccs, log_traces);
        worst_rho = std::max(worst_rho, rho);
        if (rho <= -0.5) ++rho_pass;
        if (*spectrum.per_node[argmax] == *spectrum.lcc_min) ++argmax_pass;
    }
    const double elapsed = seconds_since(start);
    std::ostringstream oss;
    oss << "spearman <= -0.5 on " << rho_pass << "/20 seeds (worst " << worst_rho
        << "); argmax-energy at min LCC on " << argmax_pass << "/20; " << elapsed << " s";
    detail = oss.str();
    return rho_pass == 20 && argmax_pass >= 16 && elapsed < 300.0;
}

// ---------------------------------------------------------------------------
// 8. Gramian algebra: additivity, input monotonicity, inverse-trace bound.
bool criterion_8(std::string& detail) {
    std::mt19937_64 rng(808);
    double worst_add = 0.0;
    bool monotone_ok = true, bound_ok = true;
    int bound_checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        StructuralNetwork g = testsupport::er_bidirected(n, 3.0, rng());
        const int a = static_cast<int>(rng() % n);
        const int b = (a + 1 + static_cast<int>(rng() % (n - 1))) % n;
        GramianResult wa = gramian(control_system(g, {a}, 1.0));
        GramianResult wb = gramian(control_system(g, {b}, 1.0));
        GramianResult wab = gramian(control_system(g, {a, b}, 1.0), true);
        worst_add = std::max(worst_add, rel_frobenius(wab.w, wa.w + wb.w));
        const double slack = 1e-10 * std::max(1.0, wab.trace);
        monotone_ok &= wab.trace >= wa.trace - slack;
        monotone_ok &= wab.lambda_min >= wa.lambda_min - slack;

        std::vector<int> many;
        for (int v = 0; v < n; ++v) {
            if (testsupport::rand_unit(rng) < 0.7) many.push_back(v);
        }
        if (many.empty()) many.push_back(a);
        GramianResult big = gramian(control_system(g, many, 1.0), true);
        if (big.condition_flag == ConditionFlag::well_conditioned && big.trace_inverse) {
            ++bound_checked;
            bound_ok &= *big.trace_inverse > static_cast<double>(n) * n / big.trace;
        }
    }
    std::ostringstream oss;
    oss << "max additivity err " << worst_add << "; monotonicity "
        << (monotone_ok ? "held" : "violated") << "; inverse bound "
        << (bound_ok ? "held" : "violated") << " on " << bound_checked << " systems";
    detail = oss.str();
    return worst_add <= 1e-10 && monotone_ok && bound_ok && bound_checked >= 10;
}

// ---------------------------------------------------------------------------
// 9. End-to-end CLI determinism across repeat runs and thread counts.

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_command(const std::string& cmd) {
    RunResult result;
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

bool criterion_9(std::string& detail) {
    const char* bin = std::getenv("CTRLCHAIN_BIN");
    if (!bin) {
        detail = "CTRLCHAIN_BIN not set";
        return false;
    }
    char tmpl[] = "/tmp/ctrlchain_accept_XXXXXX";
    char* dir = mkdtemp(tmpl);
    if (!dir) {
        detail = "cannot create temp dir";
        return false;
    }
    const std::string base = dir;
    {
        std::ofstream csv(base + "/m.csv", std::ios::binary);
        csv << testsupport::random_weighted_csv(30, 42);
    }

    auto pipeline = [&](const std::string& tag, int threads) -> std::vector<std::string> {
        const std::string d = base + "/" + tag;
        run_command("mkdir -p " + d);
        const std::string t = " --threads " + std::to_string(threads);
        std::vector<std::string> outputs;
        RunResult r1 = run_command(std::string(bin) + " ingest --matrix " + base +
                                   "/m.csv --threshold 3 --remove-isolated --out " + d +
                                   "/net.json");
        RunResult r2 = run_command(std::string(bin) + " sweep --net " + d + "/net.json --tf 1.0" +
                                   t + " --out " + d + "/sweep.csv");
        RunResult r3 = run_command(std::string(bin) + " place --net " + d +
                                   "/net.json --target-lcc 1 --samples 100 --seed 7" + t +
                                   " --out " + d + "/place.json");
        RunResult r4 = run_command(std::string(bin) + " motifs --net " + d + "/net.json --out " +
                                   d + "/motifs.json");
        RunResult r5 = run_command(std::string(bin) + " report --net " + d + "/net.json --sweep " +
                                   d + "/sweep.csv --placements " + d + "/place.json --out " + d +
                                   "/report.json");
        if (r1.exit_code || r2.exit_code || r3.exit_code || r4.exit_code || r5.exit_code) {
            return {};
        }
        outputs.push_back(slurp(d + "/net.json"));
        outputs.push_back(slurp(d + "/sweep.csv"));
        outputs.push_back(slurp(d + "/place.json"));
        outputs.push_back(slurp(d + "/motifs.json"));
        outputs.push_back(slurp(d + "/report.json"));
        // stdout echoes the per-run output paths; mask the run directory
        std::string stdout_all = r1.output + r2.output + r3.output + r4.output + r5.output;
        size_t pos;
        while ((pos = stdout_all.find(d)) != std::string::npos) {
            stdout_all.replace(pos, d.size(), "<dir>");
        }
        outputs.push_back(std::move(stdout_all));
        return outputs;
    };

    const auto first = pipeline("run1", 1);
    const auto second = pipeline("run2", 1);
    const auto threaded = pipeline("run8", 8);
    run_command("rm -rf " + base);

    if (first.empty() || second.empty() || threaded.empty()) {
        detail = "pipeline run failed";
        return false;
    }
    const bool repeat_ok = first == second;
    const bool thread_ok = first == threaded;
    std::ostringstream oss;
    oss << "repeat runs byte-identical: " << (repeat_ok ? "yes" : "NO")
        << "; threads 1 vs 8 byte-identical: " << (thread_ok ? "yes" : "NO");
    detail = oss.str();
    return repeat_ok && thread_ok;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        bool (*fn)(std::string&);
    };
    const Criterion criteria[] = {
        {1, "worked 5-node example (distances, LCC, matching, energy gap)", criterion_1},
        {2, "Gramian vs quadrature and spectral closed form", criterion_2},
        {3, "maximum matching vs exhaustive search", criterion_3},
        {4, "dense networks: perfect matching, single-input Gramian sanity", criterion_4},
        {5, "greedy placement vs exhaustive distance-k domination", criterion_5},
        {6, "triad census vs brute force and closed forms", criterion_6},
        {7, "LCC vs control energy on scale-free networks", criterion_7},
        {8, "Gramian additivity, monotonicity, inverse-trace bound", criterion_8},
        {9, "pipeline determinism across runs and thread counts", criterion_9},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
