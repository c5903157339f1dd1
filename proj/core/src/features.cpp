#include "oilspec/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "oilspec/error.hpp"
#include "oilspec/linalg.hpp"

namespace oilspec {

GaussianStats fit_gaussian(const Eigen::MatrixXd& rows) {
    const Eigen::Index n = rows.rows();
    if (n < 2) throw InputError("a Gaussian fit needs at least 2 signatures, got " + std::to_string(n));
    if (rows.cols() == 0) throw InputError("signatures have zero bands");
    if (!rows.allFinite()) throw InputError("signatures contain non-finite values");

    GaussianStats g;
    g.sample_count = n;
    g.mean = rows.colwise().mean().transpose();
    const Eigen::MatrixXd centered = rows.rowwise() - g.mean.transpose();
    Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
    cov = 0.5 * (cov + cov.transpose());
    auto reg = linalg::regularize_covariance(cov);
    g.covariance = std::move(reg.matrix);
    g.regularized = reg.applied;
    g.regularization = reg.lambda;
    return g;
}

GaussianStats fit_gaussian(const SignatureSet& set) { return fit_gaussian(set.values); }

FdaProjection fit_fda(const SignatureSet& set, int k) {
    std::map<int, std::vector<Eigen::Index>> by_class;
    for (Eigen::Index i = 0; i < set.size(); ++i) by_class[set.reheat_class[i]].push_back(i);
    std::vector<SignatureSet> classes;
    classes.reserve(by_class.size());
    for (const auto& [label, rows] : by_class) classes.push_back(set.select(rows));
    return fit_fda(classes, k);
}

FdaProjection fit_fda(const std::vector<SignatureSet>& classes, int k) {
    if (classes.size() < 2) throw InputError("FDA needs at least 2 classes");
    const Eigen::Index d = classes.front().dim();
    const auto max_k = std::min<Eigen::Index>(d, static_cast<Eigen::Index>(classes.size()) - 1);
    if (k < 1 || k > max_k)
        throw InputError("FDA output dimension " + std::to_string(k) + " outside [1, " +
                         std::to_string(max_k) + "]");

    Eigen::VectorXd grand = Eigen::VectorXd::Zero(d);
    Eigen::Index total = 0;
    for (const auto& c : classes) {
        if (c.dim() != d) throw InputError("FDA classes have different band counts");
        if (c.size() < 2) throw InputError("each FDA class needs at least 2 signatures");
        if (!c.values.allFinite()) throw InputError("signatures contain non-finite values");
        grand += c.values.colwise().sum().transpose();
        total += c.size();
    }
    grand /= static_cast<double>(total);

    Eigen::MatrixXd within = Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd between = Eigen::MatrixXd::Zero(d, d);
    for (const auto& c : classes) {
        const Eigen::VectorXd mu = c.values.colwise().mean().transpose();
        const Eigen::MatrixXd centered = c.values.rowwise() - mu.transpose();
        within += centered.transpose() * centered;
        const Eigen::VectorXd diff = mu - grand;
        between += static_cast<double>(c.size()) * diff * diff.transpose();
    }
    within = 0.5 * (within + within.transpose());
    auto reg = linalg::regularize_covariance(within);

    // Reduce to a standard symmetric problem with the Cholesky factor of S_w.
    Eigen::LLT<Eigen::MatrixXd> llt(reg.matrix);
    if (llt.info() != Eigen::Success)
        throw ComputeError("within-class scatter is singular even after regularisation");
    const Eigen::MatrixXd lower = llt.matrixL();
    Eigen::MatrixXd tmp = lower.triangularView<Eigen::Lower>().solve(between);
    Eigen::MatrixXd reduced =
        lower.triangularView<Eigen::Lower>().solve(tmp.transpose()).transpose();
    reduced = 0.5 * (reduced + reduced.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(reduced);
    if (solver.info() != Eigen::Success) throw ComputeError("FDA eigensolver failed");

    FdaProjection out;
    out.within_regularized = reg.applied;
    out.basis.resize(d, k);
    out.ratios.resize(k);
    for (int j = 0; j < k; ++j) {
        const Eigen::Index src = d - 1 - j;  // ascending order from Eigen
        Eigen::VectorXd v =
            lower.transpose().triangularView<Eigen::Upper>().solve(solver.eigenvectors().col(src));
        v.normalize();
        // Sign convention: largest-magnitude component positive.
        Eigen::Index arg = 0;
        v.cwiseAbs().maxCoeff(&arg);
        if (v[arg] < 0.0) v = -v;
        out.basis.col(j) = v;
        out.ratios[j] = std::max(solver.eigenvalues()[src], 0.0);
    }
    return out;
}

SignatureSet project(const FdaProjection& proj, const SignatureSet& set) {
    if (set.dim() != proj.input_dim())
        throw InputError("projection expects " + std::to_string(proj.input_dim()) +
                         " bands, got " + std::to_string(set.dim()));
    SignatureSet out;
    out.values = set.values * proj.basis;
    out.trial = set.trial;
    out.reheat_class = set.reheat_class;
    return out;
}

namespace {

double log_det(const Eigen::LLT<Eigen::MatrixXd>& llt) {
    const Eigen::MatrixXd& l = llt.matrixLLT();
    double s = 0.0;
    for (Eigen::Index i = 0; i < l.rows(); ++i) s += std::log(l(i, i));
    return 2.0 * s;
}

Eigen::LLT<Eigen::MatrixXd> factor(const Eigen::MatrixXd& m, const char* which) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success)
        throw InputError(std::string(which) + " covariance is not positive definite");
    return llt;
}

}  // namespace

BhattacharyyaFeature bhattacharyya(const GaussianStats& target, const GaussianStats& reference) {
    if (target.dim() != reference.dim() || target.covariance.rows() != target.dim() ||
        reference.covariance.rows() != reference.dim())
        throw InputError("Bhattacharyya inputs have mismatched dimensions");
    if (!target.mean.allFinite() || !reference.mean.allFinite())
        throw InputError("Bhattacharyya inputs contain non-finite means");

    const auto llt_t = factor(target.covariance, "target");
    const auto llt_r = factor(reference.covariance, "reference");
    const Eigen::MatrixXd pooled = 0.5 * (target.covariance + reference.covariance);
    const auto llt_p = factor(pooled, "pooled");

    const Eigen::VectorXd diff = target.mean - reference.mean;
    const Eigen::VectorXd y = llt_p.matrixL().solve(diff);

    BhattacharyyaFeature f;
    f.d_b1 = 0.125 * y.squaredNorm();
    f.d_b2 = 0.5 * (log_det(llt_p) - 0.5 * (log_det(llt_t) + log_det(llt_r)));
    f.d_b = f.d_b1 + f.d_b2;
    return f;
}

}  // namespace oilspec
