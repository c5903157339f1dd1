#include "oilspec/kmeans.hpp"

#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "oilspec/error.hpp"

namespace oilspec {

namespace {

Eigen::MatrixXd plus_plus_seeds(const Eigen::MatrixXd& x, int k, std::mt19937_64& rng) {
    const Eigen::Index n = x.rows();
    Eigen::MatrixXd centers(k, x.cols());
    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    Eigen::Index first = pick(rng);
    centers.row(0) = x.row(first);
    chosen[static_cast<std::size_t>(first)] = true;

    Eigen::VectorXd d2 = (x.rowwise() - centers.row(0)).rowwise().squaredNorm();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int c = 1; c < k; ++c) {
        const double total = d2.sum();
        Eigen::Index next = -1;
        if (total > 0.0) {
            double target = unit(rng) * total;
            for (Eigen::Index i = 0; i < n; ++i) {
                target -= d2[i];
                if (target <= 0.0 && d2[i] > 0.0) { next = i; break; }
            }
            if (next < 0)  // rounding fell off the end
                for (Eigen::Index i = n - 1; i >= 0; --i)
                    if (d2[i] > 0.0) { next = i; break; }
        } else {
            // every point coincides with a centre: fall back to an unchosen row
            std::vector<Eigen::Index> rest;
            for (Eigen::Index i = 0; i < n; ++i)
                if (!chosen[static_cast<std::size_t>(i)]) rest.push_back(i);
            std::uniform_int_distribution<std::size_t> r(0, rest.size() - 1);
            next = rest[r(rng)];
        }
        chosen[static_cast<std::size_t>(next)] = true;
        centers.row(c) = x.row(next);
        d2 = d2.cwiseMin((x.rowwise() - centers.row(c)).rowwise().squaredNorm());
    }
    return centers;
}

std::optional<KMeansResult> lloyd(const Eigen::MatrixXd& x, Eigen::MatrixXd centers,
                                  int max_iterations) {
    const Eigen::Index n = x.rows();
    const int k = static_cast<int>(centers.rows());
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                const double d = (x.row(i) - centers.row(c)).squaredNorm();
                if (d < best_d) { best_d = d; best = c; }
            }
            if (labels[static_cast<std::size_t>(i)] != best) {
                labels[static_cast<std::size_t>(i)] = best;
                changed = true;
            }
        }
        Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, x.cols());
        std::vector<int> counts(static_cast<std::size_t>(k), 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            sums.row(labels[static_cast<std::size_t>(i)]) += x.row(i);
            ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] == 0) return std::nullopt;
            centers.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];
        }
        if (!changed && iter > 0) break;
    }
    KMeansResult r;
    r.labels = std::move(labels);
    r.centers = std::move(centers);
    for (Eigen::Index i = 0; i < n; ++i)
        r.inertia += (x.row(i) - r.centers.row(r.labels[static_cast<std::size_t>(i)])).squaredNorm();
    return r;
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixXd& rows, int k, const KMeansOptions& options) {
    if (k < 1 || k > rows.rows())
        throw InputError("k-means needs 1 <= k <= n, got k=" + std::to_string(k));
    if (!rows.allFinite()) throw InputError("k-means input contains non-finite values");
    if (options.restarts < 1) throw InputError("k-means needs at least one restart");

    std::optional<KMeansResult> best;
    for (int restart = 0; restart < options.restarts; ++restart) {
        std::optional<KMeansResult> run;
        for (int attempt = 0; attempt <= options.max_empty_retries && !run; ++attempt) {
            std::seed_seq seq{options.seed, static_cast<std::uint64_t>(restart),
                              static_cast<std::uint64_t>(attempt)};
            std::mt19937_64 rng(seq);
            run = lloyd(rows, plus_plus_seeds(rows, k, rng), options.max_iterations);
        }
        if (!run)
            throw ComputeError("k-means kept producing an empty cluster after " +
                               std::to_string(options.max_empty_retries) + " reseeds");
        if (!best || run->inertia < best->inertia) best = std::move(run);
    }
    return *best;
}

std::vector<int> canonical_labels(const std::vector<int>& labels) {
    std::map<int, int> remap;
    std::vector<int> out;
    out.reserve(labels.size());
    for (int l : labels) {
        auto [it, inserted] = remap.try_emplace(l, static_cast<int>(remap.size()));
        out.push_back(it->second);
    }
    return out;
}

}  // namespace oilspec
