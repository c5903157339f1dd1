#include <cmath>
#include <string>

#include "oilspec/error.hpp"
#include "oilspec/sclust.hpp"

namespace oilspec {

Eigen::MatrixXd pairwise_sq_distances(const Eigen::MatrixXd& points) {
    const Eigen::Index n = points.rows();
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        d(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j)
            d(i, j) = d(j, i) = (points.row(i) - points.row(j)).squaredNorm();
    }
    return d;
}

AffinityGraph build_graph(const Eigen::MatrixXd& points, double sigma) {
    if (points.rows() < 2) throw InputError("an affinity graph needs at least 2 signatures");
    if (!points.allFinite()) throw InputError("signatures contain non-finite values");
    return build_graph_from_distances(pairwise_sq_distances(points), sigma);
}

AffinityGraph build_graph_from_distances(const Eigen::MatrixXd& sq, double sigma) {
    const Eigen::Index n = sq.rows();
    if (n < 2 || sq.cols() != n) throw InputError("distance matrix must be square with n >= 2");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InputError("sigma must be positive");

    AffinityGraph g;
    g.sigma = sigma;
    const double scale = -1.0 / (2.0 * sigma * sigma);
    g.affinity.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            g.affinity(i, j) = i == j ? 0.0 : std::exp(sq(i, j) * scale);
    g.degree = g.affinity.rowwise().sum();
    for (Eigen::Index i = 0; i < n; ++i)
        if (!(g.degree[i] > 0.0))
            throw ComputeError("vertex " + std::to_string(i) + " has zero degree at sigma=" +
                               std::to_string(sigma));

    const Eigen::VectorXd inv_sqrt = g.degree.array().rsqrt();
    g.laplacian = -(inv_sqrt.asDiagonal() * g.affinity * inv_sqrt.asDiagonal());
    g.laplacian.diagonal().array() += 1.0;
    g.laplacian = 0.5 * (g.laplacian + g.laplacian.transpose());
    return g;
}

}  // namespace oilspec
