#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctrlchain {

/// Nonnegative square weight matrix (fiber counts between regions).
class WeightedAdjacency {
public:
    /// Validates squareness and nonnegativity; does not touch the diagonal.
    explicit WeightedAdjacency(Eigen::MatrixXd w);

    int size() const { return static_cast<int>(w_.rows()); }
    const Eigen::MatrixXd& matrix() const { return w_; }

private:
    Eigen::MatrixXd w_;
};

/// Directed graph over nodes 0..n-1 with optional region labels.
///
/// Networks produced by threshold_binarize carry every link in both
/// directions; hand-built networks may be genuinely directed.
class StructuralNetwork {
public:
    StructuralNetwork(int n, const std::vector<std::pair<int, int>>& directed_links,
                      std::vector<std::string> labels = {});

    int size() const { return n_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    bool has_link(int from, int to) const;

    /// Number of directed links.
    int link_count() const { return n_links_; }
    /// Number of unordered pairs {i,j} joined by at least one directed link.
    int undirected_link_count() const;
    bool is_symmetric() const;

    /// Count of distinct neighbors, ignoring direction.
    int degree(int v) const;
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    /// All directed links as sorted (from, to) pairs.
    std::vector<std::pair<int, int>> links() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const;
    void set_labels(std::vector<std::string> labels);

    const std::string& source() const { return source_; }
    void set_source(std::string source) { source_ = std::move(source); }
    std::optional<double> threshold() const { return threshold_; }
    void set_threshold(double theta) { threshold_ = theta; }

    /// Provenance text: source file plus the threshold used, when known.
    std::string origin_note() const;

private:
    int n_ = 0;
    int n_links_ = 0;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<std::string> labels_;
    std::string source_;
    std::optional<double> threshold_;
};

struct NetworkStats {
    int n_nodes = 0;
    int n_links_undirected = 0;
    std::vector<int> isolated;   // node ids, ascending
    double heterogeneity = 0.0;  // H = max(H_in, H_out)
    double hetero_r = 1.0;       // normalization constant used for H
    double avg_degree = 0.0;     // c = |E_undirected| / N
    int k_min = 0;               // over non-isolated nodes
    int k_max = 0;
    double avg_distance = 0.0;   // mean hops over mutually reachable pairs,
                                 // largest component
};

/// Parses a header-less CSV of N rows x N nonnegative reals.
/// The diagonal is forced to zero. Row/column positions in errors are 1-based.
WeightedAdjacency load_matrix(std::istream& in);
WeightedAdjacency load_matrix_file(const std::string& path);

/// One region name per line; line k names node k.
std::vector<std::string> load_labels_file(const std::string& path);

/// Keeps the undirected link {i,j} iff max(w_ij, w_ji) > theta (strict),
/// then emits it as the two directed links (i->j) and (j->i).
StructuralNetwork threshold_binarize(const WeightedAdjacency& w, double theta);

/// Nodes with no links at all, ascending.
std::vector<int> isolated_regions(const StructuralNetwork& g);

struct RemovalResult {
    StructuralNetwork net;
    std::vector<int> old_to_new;  // -1 for removed nodes
};

/// Drops isolated nodes and compacts ids. Throws EmptyNetworkError when
/// nothing remains.
RemovalResult remove_isolated(const StructuralNetwork& g);

/// Degree/heterogeneity/distance summary. r defaults to the computed average
/// degree c; it only rescales H.
NetworkStats network_stats(const StructuralNetwork& g,
                           std::optional<double> r = std::nullopt);

}  // namespace ctrlchain
