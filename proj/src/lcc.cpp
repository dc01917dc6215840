#include "ctrlchain/lcc.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "ctrlchain/errors.hpp"
#include "ctrlchain/parallel.hpp"

namespace ctrlchain {

std::vector<int> input_distances(const StructuralNetwork& g, const std::vector<int>& inputs) {
    if (inputs.empty()) throw InvalidArgumentError("input set must be nonempty");
    std::vector<int> dist(g.size(), kUnreachable);
    std::deque<int> queue;
    for (int s : inputs) {
        if (s < 0 || s >= g.size()) {
            throw InvalidArgumentError("input node out of range: " + std::to_string(s));
        }
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.out_neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> lcc(const StructuralNetwork& g, const std::vector<int>& inputs) {
    const std::vector<int> dist = input_distances(g, inputs);
    int longest = 0;
    for (int d : dist) {
        if (d == kUnreachable) return std::nullopt;
        longest = std::max(longest, d);
    }
    return longest;
}

LccReport lcc_report(const StructuralNetwork& g, const std::vector<int>& inputs) {
    LccReport report;
    report.inputs = inputs;
    std::sort(report.inputs.begin(), report.inputs.end());
    report.inputs.erase(std::unique(report.inputs.begin(), report.inputs.end()),
                        report.inputs.end());
    report.dist = input_distances(g, report.inputs);
    int longest = 0;
    bool all_finite = true;
    for (int d : report.dist) {
        if (d == kUnreachable) all_finite = false;
        else longest = std::max(longest, d);
    }
    if (all_finite) report.lcc = longest;
    return report;
}

LccSpectrum single_input_lcc_spectrum(const StructuralNetwork& g) {
    LccSpectrum spectrum;
    spectrum.per_node.resize(g.size());
    for (int v = 0; v < g.size(); ++v) {
        spectrum.per_node[v] = lcc(g, {v});
        if (spectrum.per_node[v]) {
            int e = *spectrum.per_node[v];
            if (!spectrum.lcc_min || e < *spectrum.lcc_min) spectrum.lcc_min = e;
            if (!spectrum.lcc_max || e > *spectrum.lcc_max) spectrum.lcc_max = e;
        }
    }
    return spectrum;
}

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(int n) { return Bitset((n + 63) / 64, 0); }

void set_bit(Bitset& b, int i) { b[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

bool test_bit(const Bitset& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }

int count_uncovered_gain(const Bitset& cover, const Bitset& covered) {
    int gain = 0;
    for (size_t blk = 0; blk < cover.size(); ++blk) {
        gain += __builtin_popcountll(cover[blk] & ~covered[blk]);
    }
    return gain;
}

bool all_covered(const Bitset& covered, int n) {
    for (int i = 0; i < n; ++i) {
        if (!test_bit(covered, i)) return false;
    }
    return true;
}

// Nodes within directed distance <= k from v (including v itself).
Bitset coverage_set(const StructuralNetwork& g, int v, int k) {
    Bitset cover = make_bitset(g.size());
    std::vector<int> dist(g.size(), -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    set_bit(cover, v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == k) continue;
        for (int w : g.out_neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                set_bit(cover, w);
                queue.push_back(w);
            }
        }
    }
    return cover;
}

std::vector<int> greedy_sample(const std::vector<Bitset>& covers,
                               const std::vector<int>& forced, int n, std::uint64_t sample_seed) {
    std::mt19937_64 rng(sample_seed);
    Bitset covered = make_bitset(n);
    std::vector<int> chosen;
    for (int v : forced) {
        chosen.push_back(v);
        for (size_t blk = 0; blk < covered.size(); ++blk) covered[blk] |= covers[v][blk];
    }
    std::vector<int> best_nodes;
    while (!all_covered(covered, n)) {
        int best_gain = 0;
        best_nodes.clear();
        for (int v = 0; v < n; ++v) {
            int gain = count_uncovered_gain(covers[v], covered);
            if (gain > best_gain) {
                best_gain = gain;
                best_nodes.clear();
                best_nodes.push_back(v);
            } else if (gain == best_gain && gain > 0) {
                best_nodes.push_back(v);
            }
        }
        // every node is reachable from itself, so a positive gain always exists
        int pick = best_nodes[rng() % best_nodes.size()];
        chosen.push_back(pick);
        for (size_t blk = 0; blk < covered.size(); ++blk) covered[blk] |= covers[pick][blk];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

PlacementResult min_inputs_for_lcc(const StructuralNetwork& g, int k, int samples,
                                   std::uint64_t seed, int threads) {
    if (k < 0) throw InvalidArgumentError("target LCC must be nonnegative");
    if (samples < 1) throw InvalidArgumentError("sample count must be at least 1");
    const int n = g.size();
    if (n == 0) throw EmptyNetworkError();

    std::vector<Bitset> covers(n);
    for (int v = 0; v < n; ++v) covers[v] = coverage_set(g, v, k);

    // a node only coverable by itself must appear in every input set
    std::vector<int> coverer_count(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            if (test_bit(covers[v], w)) ++coverer_count[w];
        }
    }
    std::vector<int> forced;
    for (int w = 0; w < n; ++w) {
        if (coverer_count[w] == 1) forced.push_back(w);
    }

    std::vector<std::vector<int>> sets(samples);
    parallel_for(samples, threads, [&](int i) {
        sets[i] = greedy_sample(covers, forced, n, seed + static_cast<std::uint64_t>(i));
    });

    int best = n + 1;
    for (const auto& s : sets) best = std::min(best, static_cast<int>(s.size()));

    PlacementResult result;
    result.target_k = k;
    result.best_size = best;
    for (int i = 0; i < samples; ++i) {
        if (static_cast<int>(sets[i].size()) != best) continue;
        auto check = lcc(g, sets[i]);
        if (!check || *check > k) {
            throw std::logic_error("placement self-check failed: greedy set misses target");
        }
        PlacementSolution sol;
        sol.target_k = k;
        sol.input_set = sets[i];
        sol.sample_seed = seed + static_cast<std::uint64_t>(i);
        result.solutions.push_back(std::move(sol));
    }
    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const PlacementSolution& a, const PlacementSolution& b) {
                  if (a.input_set != b.input_set) return a.input_set < b.input_set;
                  return a.sample_seed < b.sample_seed;
              });
    result.participation.assign(n, 0.0);
    for (const auto& sol : result.solutions) {
        for (int v : sol.input_set) result.participation[v] += 1.0;
    }
    for (double& p : result.participation) p /= static_cast<double>(result.solutions.size());
    return result;
}

}  // namespace ctrlchain
