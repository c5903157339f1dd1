#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oilspec/signatures.hpp"

namespace oilspec {

/// Mean and covariance of a set of signatures.
struct GaussianStats {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
    Eigen::Index sample_count = 0;
    bool regularized = false;
    double regularization = 0.0;

    [[nodiscard]] Eigen::Index dim() const { return mean.size(); }
};

/// Sample mean and unbiased covariance (divisor N-1) of the rows.
/// The covariance is regularised per linalg::regularize_covariance.
GaussianStats fit_gaussian(const Eigen::MatrixXd& rows);
GaussianStats fit_gaussian(const SignatureSet& set);

/// Fisher discriminant projection: columns of `basis` are unit-length
/// generalised eigenvectors of S_b v = lambda S_w v, largest lambda first.
struct FdaProjection {
    Eigen::MatrixXd basis;          // d x k
    Eigen::VectorXd ratios;         // k discriminant ratios, non-increasing
    bool within_regularized = false;

    [[nodiscard]] Eigen::Index input_dim() const { return basis.rows(); }
    [[nodiscard]] Eigen::Index output_dim() const { return basis.cols(); }
};

/// Class labels are taken from `set.reheat_class`.
FdaProjection fit_fda(const SignatureSet& set, int k);
FdaProjection fit_fda(const std::vector<SignatureSet>& classes, int k);

SignatureSet project(const FdaProjection& proj, const SignatureSet& set);

struct BhattacharyyaFeature {
    double d_b1 = 0.0;  ///< mean (Mahalanobis-type) term
    double d_b2 = 0.0;  ///< covariance disparity term
    double d_b = 0.0;   ///< d_b1 + d_b2
    std::string reference_id;
    std::string target_id;
};

/// Bhattacharyya distance between two Gaussians, via Cholesky factors and
/// log-determinants. Throws InputError on mismatched dimensions or a
/// covariance that is not positive definite.
BhattacharyyaFeature bhattacharyya(const GaussianStats& target, const GaussianStats& reference);

}  // namespace oilspec
