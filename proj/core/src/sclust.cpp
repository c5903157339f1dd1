#include "oilspec/sclust.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "oilspec/error.hpp"
#include "oilspec/kmeans.hpp"

namespace oilspec {

std::vector<double> default_sigma_grid(int points, double lo, double hi) {
    if (points < 1 || !(lo > 0.0) || !(hi >= lo)) throw InputError("invalid sigma grid specification");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    if (points == 1) return {lo};
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) grid.push_back(lo * std::exp(step * i));
    grid.back() = hi;
    return grid;
}

SweepResult sigma_sweep(const Eigen::MatrixXd& points, const std::vector<double>& sigmas,
                        const SweepOptions& options) {
    const ModeRange modes = options.modes;
    if (modes.first < 1 || modes.last < modes.first) throw InputError("invalid mode range");
    if (sigmas.empty()) throw InputError("sigma grid is empty");
    if (sigmas.front() < 1.0)
        throw InputError("sigma grid must start at or above 1.0");
    for (std::size_t i = 1; i < sigmas.size(); ++i)
        if (!(sigmas[i] > sigmas[i - 1])) throw InputError("sigma grid must be strictly ascending");
    const Eigen::Index needed = std::max(modes.last + 1, 7);
    if (points.rows() < needed)
        throw InputError("sigma sweep needs at least " + std::to_string(needed) + " signatures");
    if (!points.allFinite()) throw InputError("signatures contain non-finite values");

    const Eigen::MatrixXd sq = pairwise_sq_distances(points);
    SweepResult r;
    r.sigmas = sigmas;
    r.modes = modes;
    const auto ns = static_cast<Eigen::Index>(sigmas.size());
    r.eigenvalues.resize(ns, modes.last + 1);
    r.gaps.resize(ns, modes.count());
    for (Eigen::Index s = 0; s < ns; ++s) {
        const double sigma = sigmas[static_cast<std::size_t>(s)];
        const AffinityGraph g = build_graph_from_distances(sq, sigma);
        linalg::SymmetricEigen eig;
        try {
            eig = linalg::symmetric_eigen(g.laplacian, options.method, false);
        } catch (const ComputeError& e) {
            throw ComputeError(std::string(e.what()) + " (sigma=" + std::to_string(sigma) + ")");
        }
        r.eigenvalues.row(s) = eig.values.head(modes.last + 1).transpose();
        for (int k = modes.first; k <= modes.last; ++k)
            r.gaps(s, k - modes.first) = eig.values[k] - eig.values[k - 1];
    }
    return r;
}

const char* to_string(SelectionAlgorithm a) { return a == SelectionAlgorithm::lgv ? "LGV" : "LBW"; }

SelectionAlgorithm parse_algorithm(const std::string& name) {
    std::string up;
    for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up == "LGV") return SelectionAlgorithm::lgv;
    if (up == "LBW") return SelectionAlgorithm::lbw;
    throw InputError("unknown selection algorithm '" + name + "' (expected LGV or LBW)");
}

namespace {

std::size_t argmax_first(const Eigen::VectorXd& v) {
    std::size_t best = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (v[i] > v[static_cast<Eigen::Index>(best)]) best = static_cast<std::size_t>(i);
    return best;
}

ModeSelection finish(const SweepResult& sweep, SelectionAlgorithm algorithm,
                     std::vector<double> scores) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < scores.size(); ++k)
        if (scores[k] > scores[best]) best = k;
    ModeSelection sel;
    sel.algorithm = algorithm;
    sel.mode = sweep.modes.first + static_cast<int>(best);
    sel.sigma_index = argmax_first(sweep.curve(sel.mode));
    sel.sigma = sweep.sigmas[sel.sigma_index];
    sel.scores = std::move(scores);
    return sel;
}

void require_curves(const SweepResult& sweep) {
    if (sweep.sigmas.empty() || sweep.gaps.rows() == 0 || sweep.gaps.cols() == 0)
        throw InputError("sweep has no eigengap curves");
}

}  // namespace

double half_max_bandwidth(std::span<const double> sigmas, const Eigen::VectorXd& curve) {
    const double half = 0.5 * curve.maxCoeff();
    double length = 0.0;
    for (std::size_t i = 1; i < sigmas.size(); ++i) {
        const double a = curve[static_cast<Eigen::Index>(i - 1)] > half ? 1.0 : 0.0;
        const double b = curve[static_cast<Eigen::Index>(i)] > half ? 1.0 : 0.0;
        length += 0.5 * (a + b) * std::log(sigmas[i] / sigmas[i - 1]);
    }
    return length;
}

ModeSelection select_lgv(const SweepResult& sweep) {
    require_curves(sweep);
    std::vector<double> peaks;
    for (int k = sweep.modes.first; k <= sweep.modes.last; ++k) peaks.push_back(sweep.curve(k).maxCoeff());
    return finish(sweep, SelectionAlgorithm::lgv, std::move(peaks));
}

ModeSelection select_lbw(const SweepResult& sweep) {
    require_curves(sweep);
    std::vector<double> widths;
    for (int k = sweep.modes.first; k <= sweep.modes.last; ++k)
        widths.push_back(half_max_bandwidth(sweep.sigmas, sweep.curve(k)));
    return finish(sweep, SelectionAlgorithm::lbw, std::move(widths));
}

ModeSelection select_mode(const SweepResult& sweep, SelectionAlgorithm algorithm) {
    return algorithm == SelectionAlgorithm::lgv ? select_lgv(sweep) : select_lbw(sweep);
}

ClusterReport spectral_cluster(const Eigen::MatrixXd& points, int k, double sigma,
                               const ClusterOptions& options) {
    if (k < 2) throw InputError("spectral clustering needs k >= 2");
    if (k > points.rows()) throw InputError("spectral clustering needs k <= number of signatures");
    const AffinityGraph g = build_graph(points, sigma);
    const auto eig = linalg::symmetric_eigen(g.laplacian, options.method, true);

    Eigen::MatrixXd embedding = eig.vectors.leftCols(k);
    for (Eigen::Index i = 0; i < embedding.rows(); ++i) {
        const double norm = embedding.row(i).norm();
        if (norm > 0.0) embedding.row(i) /= norm;
    }
    KMeansOptions km;
    km.seed = options.seed;
    km.restarts = options.restarts;
    const KMeansResult result = kmeans(embedding, k, km);

    ClusterReport report;
    report.assignment = result.labels;
    report.cluster_count = k;
    report.sigma = sigma;
    report.inertia = result.inertia;
    return report;
}

std::set<int> critical_classes(ClusterReport& report, std::span<const int> class_labels) {
    if (class_labels.size() != report.assignment.size())
        throw InputError("class labels do not match the cluster assignment");
    std::map<int, std::vector<long>> counts;
    for (std::size_t i = 0; i < class_labels.size(); ++i) {
        auto& row = counts[class_labels[i]];
        row.resize(static_cast<std::size_t>(report.cluster_count), 0);
        const int cl = report.assignment[i];
        if (cl < 0 || cl >= report.cluster_count) throw InputError("cluster id out of range");
        ++row[static_cast<std::size_t>(cl)];
    }
    if (counts.empty()) throw InputError("no signatures to summarise");
    int expected = 0;
    for (const auto& [c, row] : counts) {
        if (c != expected)
            throw InputError("reheat class " + std::to_string(expected) + " has no signatures");
        ++expected;
    }

    report.classes.clear();
    report.critical.clear();
    int previous = -1;
    for (const auto& [c, row] : counts) {
        const long top = *std::max_element(row.begin(), row.end());
        long total = 0;
        std::vector<int> tied;
        for (std::size_t k = 0; k < row.size(); ++k) {
            total += row[k];
            if (row[k] == top) tied.push_back(static_cast<int>(k));
        }
        ClassSummary s;
        s.reheat_class = c;
        s.tied = tied.size() > 1;
        s.majority_cluster = tied.front();
        if (s.tied && std::find(tied.begin(), tied.end(), previous) != tied.end())
            s.majority_cluster = previous;
        s.purity = static_cast<double>(top) / static_cast<double>(total);
        if (c >= 1 && s.majority_cluster != previous) report.critical.insert(c);
        previous = s.majority_cluster;
        report.classes.push_back(s);
    }
    return report.critical;
}

double agreement(const std::set<int>& predicted, const std::set<int>& reference) {
    if (predicted.empty() && reference.empty()) return 1.0;
    std::size_t inter = 0;
    for (int c : predicted) inter += reference.count(c);
    const std::size_t uni = predicted.size() + reference.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<Eigen::Index> subsample_per_class(const SignatureSet& set, int per_class,
                                              std::uint64_t seed) {
    std::map<int, std::vector<Eigen::Index>> by_class;
    for (Eigen::Index i = 0; i < set.size(); ++i) by_class[set.reheat_class[i]].push_back(i);
    std::vector<Eigen::Index> out;
    std::mt19937_64 rng(seed);
    for (auto& [c, rows] : by_class) {
        if (per_class > 0 && static_cast<int>(rows.size()) > per_class) {
            std::shuffle(rows.begin(), rows.end(), rng);
            rows.resize(static_cast<std::size_t>(per_class));
        }
        out.insert(out.end(), rows.begin(), rows.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oilspec
