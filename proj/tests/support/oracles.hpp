#pragma once

// Test-only reference computations. Nothing here calls into the library's
// implementation of the quantity being checked.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oilspec::oracle {

/// Adjusted Rand index between two labelings (Hubert & Arabie).
inline double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<std::pair<int, int>, long> joint;
    std::map<int, long> ca, cb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++joint[{a[i], b[i]}];
        ++ca[a[i]];
        ++cb[b[i]];
    }
    auto c2 = [](long n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); };
    double index = 0, sa = 0, sb = 0;
    for (const auto& [k, n] : joint) index += c2(n);
    for (const auto& [k, n] : ca) sa += c2(n);
    for (const auto& [k, n] : cb) sb += c2(n);
    const double total = c2(static_cast<long>(a.size()));
    const double expected = sa * sb / total;
    const double max_index = 0.5 * (sa + sb);
    if (max_index == expected) return 1.0;
    return (index - expected) / (max_index - expected);
}

/// Connected components of the graph with an edge wherever w(i,j) > threshold.
inline int component_count(const Eigen::MatrixXd& w, double threshold) {
    const auto n = static_cast<std::size_t>(w.rows());
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) > threshold)
                parent[find(i)] = find(j);
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) count += find(i) == i;
    return count;
}

/// Random symmetric positive-definite matrix with eigenvalues in [lo, hi].
inline Eigen::MatrixXd random_spd(int d, std::mt19937_64& rng, double lo = 0.2, double hi = 5.0) {
    std::normal_distribution<double> n(0, 1);
    std::uniform_real_distribution<double> u(lo, hi);
    Eigen::MatrixXd a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = n(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd q = qr.householderQ();
    Eigen::VectorXd ev(d);
    for (int i = 0; i < d; ++i) ev[i] = u(rng);
    Eigen::MatrixXd m = q * ev.asDiagonal() * q.transpose();
    return 0.5 * (m + m.transpose());
}

inline Eigen::VectorXd random_vector(int d, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0, scale);
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v[i] = n(rng);
    return v;
}

/// Gaussian blobs: `groups` centres spaced `separation` apart on a simplex-like
/// layout (each centre on its own axis, scaled), isotropic spread `spread`.
struct PlantedBlobs {
    Eigen::MatrixXd points;
    std::vector<int> labels;
};

inline PlantedBlobs planted_blobs(int groups, int per_group, int dim, double separation, double spread,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0, 1);
    PlantedBlobs out;
    out.points.resize(static_cast<Eigen::Index>(groups) * per_group, dim);
    for (int g = 0; g < groups; ++g) {
        Eigen::VectorXd centre = Eigen::VectorXd::Zero(dim);
        // axis-aligned centres: pairwise distance = separation
        centre[g % dim] = separation / std::sqrt(2.0);
        if (g >= dim) centre[(g + 1) % dim] = -separation / std::sqrt(2.0);
        for (int s = 0; s < per_group; ++s) {
            for (int k = 0; k < dim; ++k)
                out.points(static_cast<Eigen::Index>(g) * per_group + s, k) = centre[k] + spread * n(rng);
            out.labels.push_back(g);
        }
    }
    return out;
}

}  // namespace oilspec::oracle
