#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oilspec {

struct KMeansOptions {
    int restarts = 50;
    int max_iterations = 300;
    int max_empty_retries = 10;  ///< reseeds allowed per restart when a cluster empties
    std::uint64_t seed = 0;
};

struct KMeansResult {
    std::vector<int> labels;
    Eigen::MatrixXd centers;  // k x d
    double inertia = 0.0;     // sum of squared distances to assigned centre
};

/// Lloyd iterations from k-means++ seeds; keeps the restart with lowest inertia.
/// Throws ComputeError if every attempt of some restart ends with an empty cluster.
KMeansResult kmeans(const Eigen::MatrixXd& rows, int k, const KMeansOptions& options = {});

/// Relabels clusters by order of first appearance (0, 1, 2, ...).
std::vector<int> canonical_labels(const std::vector<int>& labels);

}  // namespace oilspec
