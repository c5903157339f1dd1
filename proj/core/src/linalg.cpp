#include "oilspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "oilspec/error.hpp"

namespace oilspec::linalg {

namespace {

double offdiag_norm(const Eigen::MatrixXd& a) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

SymmetricEigen sorted(Eigen::VectorXd values, Eigen::MatrixXd vectors, bool with_vectors) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return values[x] < values[y]; });
    SymmetricEigen out;
    out.values.resize(values.size());
    if (with_vectors) out.vectors.resize(vectors.rows(), vectors.cols());
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.values[static_cast<Eigen::Index>(k)] = values[order[k]];
        if (with_vectors) out.vectors.col(static_cast<Eigen::Index>(k)) = vectors.col(order[k]);
    }
    return out;
}

}  // namespace

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& input, double tolerance, int max_sweeps,
                            bool compute_vectors) {
    if (input.rows() != input.cols()) throw InputError("eigensolver needs a square matrix");
    const Eigen::Index n = input.rows();
    Eigen::MatrixXd a = 0.5 * (input + input.transpose());
    Eigen::MatrixXd v;
    if (compute_vectors) v = Eigen::MatrixXd::Identity(n, n);

    const double threshold = tolerance * std::max(1.0, a.norm());
    int sweep = 0;
    while (offdiag_norm(a) > threshold) {
        if (sweep == max_sweeps)
            throw ComputeError("Jacobi eigensolver did not converge in " +
                               std::to_string(max_sweeps) + " sweeps");
        ++sweep;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation angle zeroing a(p,q) (Golub & Van Loan, sym.schur2).
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                if (compute_vectors) {
                    for (Eigen::Index k = 0; k < n; ++k) {
                        const double vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = c * vkp - s * vkq;
                        v(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    auto out = sorted(a.diagonal(), std::move(v), compute_vectors);
    out.sweeps = sweep;
    return out;
}

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a, EigenMethod method,
                               bool compute_vectors) {
    if (method == EigenMethod::jacobi) return jacobi_eigen(a, 1e-10, 100, compute_vectors);
    if (a.rows() != a.cols()) throw InputError("eigensolver needs a square matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        a, compute_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ComputeError("tridiagonal QR eigensolver did not converge");
    SymmetricEigen out;
    out.values = solver.eigenvalues();  // already ascending
    if (compute_vectors) out.vectors = solver.eigenvectors();
    return out;
}

RegularizedCovariance regularize_covariance(const Eigen::MatrixXd& cov) {
    if (cov.rows() != cov.cols() || cov.rows() == 0)
        throw InputError("covariance must be square and non-empty");
    if (!cov.allFinite()) throw InputError("covariance contains non-finite values");
    const auto d = static_cast<double>(cov.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov, Eigen::EigenvaluesOnly);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    RegularizedCovariance out{cov, false, 0.0};
    if (lo > 0.0 && hi / lo <= kMaxCondition) return out;
    const double trace = cov.trace();
    out.lambda = trace > 0.0 ? kRegularizationScale * trace / d : kRegularizationScale;
    out.matrix.diagonal().array() += out.lambda;
    out.applied = true;
    return out;
}

}  // namespace oilspec::linalg
