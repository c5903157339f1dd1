#pragma once

#include <Eigen/Dense>

namespace oilspec::linalg {

/// Eigenpairs of a symmetric matrix, eigenvalues ascending.
struct SymmetricEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // column i pairs with values[i]; empty when not requested
    int sweeps = 0;           // Jacobi sweeps used (0 for other methods)
};

enum class EigenMethod {
    jacobi,          ///< cyclic Jacobi rotations
    tridiagonal_qr,  ///< Householder tridiagonalisation + implicit QR (Eigen)
};

/// Cyclic Jacobi with off-diagonal Frobenius stopping rule
/// ||offdiag(A)||_F <= tolerance * max(1, ||A||_F). Throws ComputeError
/// when the sweep cap is reached first.
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a, double tolerance = 1e-10,
                            int max_sweeps = 100, bool compute_vectors = true);

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a, EigenMethod method,
                               bool compute_vectors = true);

struct RegularizedCovariance {
    Eigen::MatrixXd matrix;
    bool applied = false;
    double lambda = 0.0;
};

/// Adds lambda*I when the smallest eigenvalue is <= 0 or the condition number
/// exceeds 1e12. lambda = 1e-6 * trace/d, or 1e-6 for a zero matrix.
RegularizedCovariance regularize_covariance(const Eigen::MatrixXd& cov);

inline constexpr double kMaxCondition = 1e12;
inline constexpr double kRegularizationScale = 1e-6;

}  // namespace oilspec::linalg
