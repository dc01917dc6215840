#include "ctrlchain/net.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ctrlchain/errors.hpp"

namespace ctrlchain {

WeightedAdjacency::WeightedAdjacency(Eigen::MatrixXd w) : w_(std::move(w)) {
    if (w_.rows() != w_.cols()) {
        throw NonSquareError(static_cast<int>(w_.rows()), static_cast<int>(w_.cols()));
    }
    if (w_.rows() < 1) {
        throw InvalidArgumentError("weight matrix must have at least one row");
    }
    for (Eigen::Index i = 0; i < w_.rows(); ++i) {
        for (Eigen::Index j = 0; j < w_.cols(); ++j) {
            if (w_(i, j) < 0.0) {
                throw NegativeEntryError(static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                                         w_(i, j));
            }
        }
    }
}

StructuralNetwork::StructuralNetwork(int n,
                                     const std::vector<std::pair<int, int>>& directed_links,
                                     std::vector<std::string> labels)
    : n_(n), out_(n), in_(n) {
    if (n < 0) throw InvalidArgumentError("node count must be nonnegative");
    for (const auto& [from, to] : directed_links) {
        if (from < 0 || from >= n || to < 0 || to >= n) {
            throw InvalidArgumentError("link endpoint out of range: " + std::to_string(from) +
                                       "->" + std::to_string(to));
        }
        if (from == to) {
            throw InvalidArgumentError("self-loop not allowed at node " + std::to_string(from));
        }
        out_[from].push_back(to);
    }
    n_links_ = 0;
    for (int v = 0; v < n_; ++v) {
        auto& nbrs = out_[v];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        n_links_ += static_cast<int>(nbrs.size());
        for (int w : nbrs) in_[w].push_back(v);
    }
    for (auto& nbrs : in_) std::sort(nbrs.begin(), nbrs.end());
    if (!labels.empty()) set_labels(std::move(labels));
}

bool StructuralNetwork::has_link(int from, int to) const {
    const auto& nbrs = out_[from];
    return std::binary_search(nbrs.begin(), nbrs.end(), to);
}

int StructuralNetwork::undirected_link_count() const {
    int count = 0;
    for (int v = 0; v < n_; ++v) {
        for (int w : out_[v]) {
            if (v < w || !has_link(w, v)) ++count;
        }
    }
    // pairs with links in both directions were counted once (v < w branch),
    // one-way links counted once regardless of orientation
    return count;
}

bool StructuralNetwork::is_symmetric() const {
    for (int v = 0; v < n_; ++v) {
        for (int w : out_[v]) {
            if (!has_link(w, v)) return false;
        }
    }
    return true;
}

int StructuralNetwork::degree(int v) const {
    // distinct neighbors over both directions; both lists are sorted
    const auto& a = out_[v];
    const auto& b = in_[v];
    size_t i = 0, j = 0;
    int count = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            ++count;
            ++i;
        } else if (i == a.size() || b[j] < a[i]) {
            ++count;
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::vector<std::pair<int, int>> StructuralNetwork::links() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(n_links_);
    for (int v = 0; v < n_; ++v) {
        for (int w : out_[v]) result.emplace_back(v, w);
    }
    return result;
}

const std::string& StructuralNetwork::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[v];
}

void StructuralNetwork::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_) {
        throw InvalidArgumentError("label count " + std::to_string(labels.size()) +
                                   " does not match node count " + std::to_string(n_));
    }
    labels_ = std::move(labels);
}

std::string StructuralNetwork::origin_note() const {
    std::string note = source_.empty() ? std::string("<unknown>") : source_;
    if (threshold_) {
        std::ostringstream oss;
        oss << note << " (threshold=" << *threshold_ << ")";
        return oss.str();
    }
    return note;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

WeightedAdjacency load_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int row_idx = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row_idx;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string cell;
        int col_idx = 0;
        while (std::getline(ls, cell, ',')) {
            ++col_idx;
            std::string t = trim(cell);
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
            if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
                throw CellParseError(row_idx, col_idx, t);
            }
            if (value < 0.0) throw NegativeEntryError(row_idx, col_idx, value);
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw NonSquareError(0, 0);
    const size_t n_cols = rows.front().size();
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n_cols) {
            throw NonSquareError(static_cast<int>(rows.size()),
                                 static_cast<int>(rows[r].size()));
        }
    }
    if (rows.size() != n_cols) {
        throw NonSquareError(static_cast<int>(rows.size()), static_cast<int>(n_cols));
    }
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXd w(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w(i, j) = rows[i][j];
    }
    w.diagonal().setZero();
    return WeightedAdjacency(std::move(w));
}

WeightedAdjacency load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open matrix file");
    return load_matrix(in);
}

std::vector<std::string> load_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open labels file");
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) labels.push_back(trim(line));
    while (!labels.empty() && labels.back().empty()) labels.pop_back();
    return labels;
}

StructuralNetwork threshold_binarize(const WeightedAdjacency& w, double theta) {
    if (theta < 0.0) throw InvalidArgumentError("threshold must be nonnegative");
    const int n = w.size();
    const Eigen::MatrixXd& m = w.matrix();
    std::vector<std::pair<int, int>> links;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::max(m(i, j), m(j, i)) > theta) {
                links.emplace_back(i, j);
                links.emplace_back(j, i);
            }
        }
    }
    StructuralNetwork g(n, links);
    g.set_threshold(theta);
    return g;
}

std::vector<int> isolated_regions(const StructuralNetwork& g) {
    std::vector<int> result;
    for (int v = 0; v < g.size(); ++v) {
        if (g.out_degree(v) == 0 && g.in_degree(v) == 0) result.push_back(v);
    }
    return result;
}

RemovalResult remove_isolated(const StructuralNetwork& g) {
    const std::vector<int> isolated = isolated_regions(g);
    const int n = g.size();
    std::vector<int> old_to_new(n, -1);
    int next = 0;
    size_t iso_pos = 0;
    for (int v = 0; v < n; ++v) {
        if (iso_pos < isolated.size() && isolated[iso_pos] == v) {
            ++iso_pos;
            continue;
        }
        old_to_new[v] = next++;
    }
    if (next == 0) throw EmptyNetworkError();

    std::vector<std::pair<int, int>> links;
    links.reserve(g.link_count());
    for (const auto& [from, to] : g.links()) {
        links.emplace_back(old_to_new[from], old_to_new[to]);
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(next);
        for (int v = 0; v < n; ++v) {
            if (old_to_new[v] >= 0) labels[old_to_new[v]] = g.labels()[v];
        }
    }
    StructuralNetwork compact(next, links, std::move(labels));
    compact.set_source(g.source());
    if (g.threshold()) compact.set_threshold(*g.threshold());
    return {std::move(compact), std::move(old_to_new)};
}

namespace {

// BFS distances along directed links from a single source; -1 = unreachable.
std::vector<int> bfs_from(const StructuralNetwork& g, int source) {
    std::vector<int> dist(g.size(), -1);
    std::deque<int> queue;
    dist[source] = 0;
    queue.push_back(source);
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

std::vector<int> largest_weak_component(const StructuralNetwork& g) {
    const int n = g.size();
    std::vector<int> comp(n, -1);
    int n_comp = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::deque<int> queue{start};
        comp[start] = n_comp;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            auto visit = [&](int w) {
                if (comp[w] < 0) {
                    comp[w] = n_comp;
                    queue.push_back(w);
                }
            };
            for (int w : g.out_neighbors(u)) visit(w);
            for (int w : g.in_neighbors(u)) visit(w);
        }
        ++n_comp;
    }
    std::vector<int> sizes(n_comp, 0);
    for (int v = 0; v < n; ++v) ++sizes[comp[v]];
    int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
        if (comp[v] == best) members.push_back(v);
    }
    return members;
}

double degree_heterogeneity(const std::vector<int>& degrees, double r) {
    const size_t n = degrees.size();
    // mean absolute pairwise difference via sorted prefix sums
    std::vector<int> sorted(degrees);
    std::sort(sorted.begin(), sorted.end());
    double total = 0.0;
    double prefix = 0.0;
    for (size_t i = 0; i < n; ++i) {
        total += static_cast<double>(sorted[i]) * static_cast<double>(i) - prefix;
        prefix += sorted[i];
    }
    // 'total' is the sum over unordered pairs; the double sum counts each twice
    return 2.0 * total / (r * static_cast<double>(n) * static_cast<double>(n));
}

}  // namespace

NetworkStats network_stats(const StructuralNetwork& g, std::optional<double> r) {
    if (g.size() == 0) throw EmptyNetworkError();
    NetworkStats stats;
    stats.n_nodes = g.size();
    stats.n_links_undirected = g.undirected_link_count();
    stats.isolated = isolated_regions(g);
    stats.avg_degree = static_cast<double>(stats.n_links_undirected) / g.size();

    // k_min/k_max over connected nodes so that isolated regions do not pin
    // the minimum to zero
    stats.k_min = 0;
    stats.k_max = 0;
    bool first = true;
    for (int v = 0; v < g.size(); ++v) {
        int d = g.degree(v);
        if (d == 0) continue;
        if (first) {
            stats.k_min = stats.k_max = d;
            first = false;
        } else {
            stats.k_min = std::min(stats.k_min, d);
            stats.k_max = std::max(stats.k_max, d);
        }
    }

    if (r && *r <= 0.0) throw InvalidArgumentError("heterogeneity constant r must be positive");
    stats.hetero_r = r ? *r : (stats.avg_degree > 0.0 ? stats.avg_degree : 1.0);
    std::vector<int> in_deg(g.size()), out_deg(g.size());
    for (int v = 0; v < g.size(); ++v) {
        in_deg[v] = g.in_degree(v);
        out_deg[v] = g.out_degree(v);
    }
    stats.heterogeneity = std::max(degree_heterogeneity(in_deg, stats.hetero_r),
                                   degree_heterogeneity(out_deg, stats.hetero_r));

    // average distance over ordered, mutually reachable pairs in the largest
    // weakly connected component
    const std::vector<int> members = largest_weak_component(g);
    std::vector<char> in_comp(g.size(), 0);
    for (int v : members) in_comp[v] = 1;
    std::vector<std::vector<int>> dists(members.size());
    for (size_t i = 0; i < members.size(); ++i) dists[i] = bfs_from(g, members[i]);
    std::vector<int> index_of(g.size(), -1);
    for (size_t i = 0; i < members.size(); ++i) index_of[members[i]] = static_cast<int>(i);
    long long pair_count = 0;
    long long hop_sum = 0;
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = 0; j < members.size(); ++j) {
            if (i == j) continue;
            int u = members[i], v = members[j];
            int duv = dists[i][v];
            int dvu = dists[j][u];
            if (duv > 0 && dvu > 0) {
                hop_sum += duv;
                ++pair_count;
            }
        }
    }
    stats.avg_distance = pair_count > 0 ? static_cast<double>(hop_sum) / pair_count : 0.0;
    return stats;
}

}  // namespace ctrlchain
