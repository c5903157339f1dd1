#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oilspec/linalg.hpp"
#include "oilspec/signatures.hpp"

namespace oilspec {

/// Gaussian-kernel affinity graph and its symmetric normalised Laplacian
/// L = I - D^{-1/2} W D^{-1/2}.
struct AffinityGraph {
    double sigma = 1.0;
    Eigen::MatrixXd affinity;  ///< W, zero diagonal
    Eigen::VectorXd degree;    ///< diagonal of D
    Eigen::MatrixXd laplacian;

    [[nodiscard]] Eigen::Index size() const { return affinity.rows(); }
};

/// Squared Euclidean distances between rows.
Eigen::MatrixXd pairwise_sq_distances(const Eigen::MatrixXd& points);

AffinityGraph build_graph(const Eigen::MatrixXd& points, double sigma);
AffinityGraph build_graph_from_distances(const Eigen::MatrixXd& sq_distances, double sigma);

/// Inclusive range of cluster-count modes searched by the eigengap rules.
struct ModeRange {
    int first = 3;
    int last = 6;

    [[nodiscard]] int count() const { return last - first + 1; }
};

/// Log-spaced grid, default 60 points over [1, 100].
std::vector<double> default_sigma_grid(int points = 60, double lo = 1.0, double hi = 100.0);

struct SweepOptions {
    ModeRange modes;
    linalg::EigenMethod method = linalg::EigenMethod::tridiagonal_qr;
};

/// Eigengap curves g_k(sigma) = lambda_{k+1} - lambda_k over a sigma grid
/// (eigenvalues ascending, 1-indexed).
struct SweepResult {
    std::vector<double> sigmas;
    ModeRange modes;
    Eigen::MatrixXd eigenvalues;  ///< sigma x (modes.last + 1) smallest eigenvalues
    Eigen::MatrixXd gaps;         ///< sigma x modes.count()
    std::optional<int> selected_mode;
    std::optional<double> dominant_sigma;

    [[nodiscard]] double gap(std::size_t sigma_index, int mode) const {
        return gaps(static_cast<Eigen::Index>(sigma_index), mode - modes.first);
    }
    [[nodiscard]] Eigen::VectorXd curve(int mode) const { return gaps.col(mode - modes.first); }
};

/// Eigendecomposes the Laplacian at every sigma. The grid must be ascending
/// and start at or above 1.0.
SweepResult sigma_sweep(const Eigen::MatrixXd& points, const std::vector<double>& sigmas,
                        const SweepOptions& options = {});

enum class SelectionAlgorithm { lgv, lbw };

const char* to_string(SelectionAlgorithm a);
SelectionAlgorithm parse_algorithm(const std::string& name);

struct ModeSelection {
    SelectionAlgorithm algorithm = SelectionAlgorithm::lgv;
    int mode = 0;                 ///< prominent mode k*
    double sigma = 0.0;           ///< dominant sigma
    std::size_t sigma_index = 0;
    std::vector<double> scores;   ///< per mode: peak gap (LGV) or bandwidth (LBW)
};

/// Largest gap value: mode with the highest peak gap over the sweep.
ModeSelection select_lgv(const SweepResult& sweep);
/// Largest bandwidth: mode whose gap stays above half its own peak over the
/// longest sigma span, measured in log(sigma) (trapezoidal over the grid).
ModeSelection select_lbw(const SweepResult& sweep);
ModeSelection select_mode(const SweepResult& sweep, SelectionAlgorithm algorithm);

/// Length in log(sigma) over which the curve exceeds half its maximum.
double half_max_bandwidth(std::span<const double> sigmas, const Eigen::VectorXd& curve);

struct ClusterOptions {
    std::uint64_t seed = 0;
    int restarts = 50;
    linalg::EigenMethod method = linalg::EigenMethod::tridiagonal_qr;
};

struct ClassSummary {
    int reheat_class = 0;
    int majority_cluster = 0;
    double purity = 0.0;
    bool tied = false;
};

struct ClusterReport {
    std::vector<int> assignment;  ///< cluster id per signature, in input order
    int cluster_count = 0;
    double sigma = 0.0;
    double inertia = 0.0;
    std::optional<SelectionAlgorithm> algorithm;
    std::vector<ClassSummary> classes;  ///< filled by critical_classes
    std::set<int> critical;             ///< filled by critical_classes
};

/// Ng-Jordan-Weiss: the k eigenvectors of L with smallest eigenvalues,
/// rows normalised to unit length, then k-means++ with restarts.
ClusterReport spectral_cluster(const Eigen::MatrixXd& points, int k, double sigma,
                               const ClusterOptions& options = {});

/// Maps each reheat class to its majority cluster m(c) and returns
/// {c >= 1 : m(c) != m(c-1)}. Classes must be 0..C-1 with none missing.
/// A majority tie resolves toward the cluster of class c-1, then the lower id.
std::set<int> critical_classes(ClusterReport& report, std::span<const int> class_labels);

/// |A n B| / |A u B|; two empty sets score 1.
double agreement(const std::set<int>& predicted, const std::set<int>& reference);

/// Up to `per_class` rows of each class, drawn uniformly without replacement,
/// returned sorted. per_class <= 0 keeps everything.
std::vector<Eigen::Index> subsample_per_class(const SignatureSet& set, int per_class,
                                              std::uint64_t seed);

}  // namespace oilspec
