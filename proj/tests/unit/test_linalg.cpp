#include <random>

#include <gtest/gtest.h>

#include "oilspec/error.hpp"
#include "oilspec/linalg.hpp"
#include "oracles.hpp"

using namespace oilspec;

TEST(Jacobi, MatchesTridiagonalQrOnRandomSymmetric) {
    std::mt19937_64 rng(5);
    for (int n : {1, 2, 5, 17, 40}) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n);
        a = 0.5 * (a + a.transpose()).eval();
        const auto jac = linalg::jacobi_eigen(a);
        const auto qr = linalg::symmetric_eigen(a, linalg::EigenMethod::tridiagonal_qr);
        EXPECT_LT((jac.values - qr.values).cwiseAbs().maxCoeff(), 1e-9) << "n=" << n;
        // A V = V diag(lambda), V orthonormal
        EXPECT_LT((a * jac.vectors - jac.vectors * jac.values.asDiagonal()).norm(), 1e-8);
        EXPECT_LT((jac.vectors.transpose() * jac.vectors - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-9);
    }
}

TEST(Jacobi, EigenvaluesAscendingAndKnownSpectrum) {
    Eigen::MatrixXd a(2, 2);
    a << 2, 1, 1, 2;
    const auto e = linalg::jacobi_eigen(a);
    EXPECT_NEAR(e.values[0], 1.0, 1e-14);
    EXPECT_NEAR(e.values[1], 3.0, 1e-14);
}

TEST(Jacobi, ReportsNonConvergence) {
    std::mt19937_64 rng(1);
    const Eigen::MatrixXd a = oracle::random_spd(30, rng);
    EXPECT_THROW(linalg::jacobi_eigen(a, 1e-10, 1), ComputeError);
}

TEST(Regularize, LeavesWellConditionedAlone) {
    std::mt19937_64 rng(2);
    const Eigen::MatrixXd a = oracle::random_spd(9, rng);
    const auto r = linalg::regularize_covariance(a);
    EXPECT_FALSE(r.applied);
    EXPECT_EQ(r.matrix, a);
}

TEST(Regularize, AddsScaledIdentityWhenSingular) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
    a(0, 0) = 3.0;
    const auto r = linalg::regularize_covariance(a);
    EXPECT_TRUE(r.applied);
    EXPECT_DOUBLE_EQ(r.lambda, 1e-6 * 3.0 / 3.0);
    EXPECT_DOUBLE_EQ(r.matrix(1, 1), r.lambda);
}

TEST(Regularize, ZeroMatrixGetsAbsoluteFloor) {
    const auto r = linalg::regularize_covariance(Eigen::MatrixXd::Zero(4, 4));
    EXPECT_TRUE(r.applied);
    EXPECT_EQ(r.matrix, Eigen::MatrixXd::Identity(4, 4) * 1e-6);
}

TEST(Regularize, IllConditionedTriggers) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
    a(1, 1) = 1e-13;
    EXPECT_TRUE(linalg::regularize_covariance(a).applied);
}
