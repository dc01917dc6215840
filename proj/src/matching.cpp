#include "ctrlchain/matching.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace ctrlchain {

BipartiteGraph bipartite_representation(const StructuralNetwork& g) {
    BipartiteGraph b;
    b.n = g.size();
    b.edges = g.links();
    return b;
}

namespace {

// Explicit Fisher-Yates; std::shuffle's draw sequence is implementation
// defined and the matching result must be reproducible across platforms.
template <typename T>
void deterministic_shuffle(std::vector<T>& values, std::mt19937_64& rng) {
    for (size_t i = values.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng() % i);
        std::swap(values[i - 1], values[j]);
    }
}

constexpr int kInf = 1 << 30;

struct HopcroftKarp {
    int n;
    std::vector<std::vector<int>> adj;  // plus -> list of minus
    std::vector<int> match_plus;        // plus -> minus or -1
    std::vector<int> match_minus;       // minus -> plus or -1
    std::vector<int> dist;

    explicit HopcroftKarp(int n_) : n(n_), adj(n_), match_plus(n_, -1), match_minus(n_, -1),
                                    dist(n_) {}

    bool bfs() {
        std::deque<int> queue;
        for (int u = 0; u < n; ++u) {
            if (match_plus[u] < 0) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool found_free = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                int next = match_minus[v];
                if (next < 0) {
                    found_free = true;
                } else if (dist[next] == kInf) {
                    dist[next] = dist[u] + 1;
                    queue.push_back(next);
                }
            }
        }
        return found_free;
    }

    bool dfs(int u) {
        for (int v : adj[u]) {
            int next = match_minus[v];
            if (next < 0 || (dist[next] == dist[u] + 1 && dfs(next))) {
                match_plus[u] = v;
                match_minus[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }

    void run() {
        while (bfs()) {
            for (int u = 0; u < n; ++u) {
                if (match_plus[u] < 0) dfs(u);
            }
        }
    }
};

}  // namespace

MatchingResult maximum_matching(const BipartiteGraph& b, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges = b.edges;
    std::sort(edges.begin(), edges.end());
    deterministic_shuffle(edges, rng);

    HopcroftKarp hk(b.n);
    for (const auto& [u, v] : edges) hk.adj[u].push_back(v);
    hk.run();

    MatchingResult result;
    for (int u = 0; u < b.n; ++u) {
        if (hk.match_plus[u] >= 0) result.matched_edges.emplace_back(u, hk.match_plus[u]);
    }
    for (int v = 0; v < b.n; ++v) {
        if (hk.match_minus[v] < 0) result.unmatched_minus.push_back(v);
    }
    return result;
}

std::vector<int> driver_nodes(const MatchingResult& m) {
    if (!m.unmatched_minus.empty()) return m.unmatched_minus;
    return {0};
}

}  // namespace ctrlchain
