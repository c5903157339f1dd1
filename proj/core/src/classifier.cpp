#include "oilspec/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include "oilspec/error.hpp"

namespace oilspec {

double binary_accuracy(const BinaryCounts& c) {
    const long total = c.tp + c.tn + c.fp + c.fn;
    if (total == 0) throw InputError("accuracy of an empty count table is undefined");
    return static_cast<double>(c.tp + c.tn) / static_cast<double>(total);
}

ConfusionMatrix::ConfusionMatrix(int classes) {
    if (classes < 1) throw InputError("confusion matrix needs at least one class");
    counts_ = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>::Zero(classes, classes);
}

void ConfusionMatrix::add(int truth, int predicted) {
    if (truth < 0 || truth >= classes() || predicted < 0 || predicted >= classes())
        throw InputError("label outside the confusion matrix");
    ++counts_(truth, predicted);
}

BinaryCounts ConfusionMatrix::one_vs_rest(int c) const {
    BinaryCounts b;
    b.tp = counts_(c, c);
    b.fn = counts_.row(c).sum() - b.tp;
    b.fp = counts_.col(c).sum() - b.tp;
    b.tn = total() - b.tp - b.fn - b.fp;
    return b;
}

void write_confusion_csv(std::ostream& out, const ConfusionMatrix& cm) {
    out << "true_class";
    for (int p = 0; p < cm.classes(); ++p) out << ",pred_" << p;
    out << '\n';
    for (int t = 0; t < cm.classes(); ++t) {
        out << t;
        for (int p = 0; p < cm.classes(); ++p) out << ',' << cm.at(t, p);
        out << '\n';
    }
}

Evaluation summarize(const ConfusionMatrix& cm) {
    if (cm.total() == 0) throw InputError("cannot evaluate an empty data set");
    Evaluation e;
    e.confusion = cm;
    const int classes = cm.classes();
    e.fraction_correct = static_cast<double>(cm.correct()) / static_cast<double>(cm.total());
    double macro = 0.0;
    for (int c = 0; c < classes; ++c) {
        macro += binary_accuracy(cm.one_vs_rest(c));
        const long row = cm.row_total(c);
        e.per_class_accuracy.push_back(
            row > 0 ? std::optional<double>(static_cast<double>(cm.at(c, c)) / row) : std::nullopt);
    }
    e.macro_accuracy = macro / classes;

    long heated = 0, heated_correct = 0, binary_correct = 0;
    for (int t = 0; t < classes; ++t) {
        for (int p = 0; p < classes; ++p) {
            const long n = cm.at(t, p);
            if (t >= 1) {
                heated += n;
                if (t == p) heated_correct += n;
            }
            if ((t == 0) == (p == 0)) binary_correct += n;
        }
    }
    if (heated > 0) e.heated_only_accuracy = static_cast<double>(heated_correct) / heated;
    e.pure_vs_heated_accuracy = static_cast<double>(binary_correct) / cm.total();
    return e;
}

Evaluation evaluate(const SvmModel& model, std::span<const LabelledFeature> data) {
    if (data.empty()) throw InputError("cannot evaluate an empty data set");
    ConfusionMatrix cm(model.class_count);
    for (const auto& f : data) cm.add(f.label, model.predict(f.x));
    return summarize(cm);
}

std::vector<int> stratified_folds(std::span<const LabelledFeature> data, int folds,
                                  std::uint64_t seed) {
    if (folds < 2) throw InputError("cross-validation needs at least 2 folds");
    int max_label = -1;
    for (const auto& f : data) max_label = std::max(max_label, f.label);
    std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(max_label + 1));
    for (std::size_t i = 0; i < data.size(); ++i)
        by_class[static_cast<std::size_t>(data[i].label)].push_back(i);

    std::mt19937_64 rng(seed);
    std::vector<int> fold_of(data.size(), 0);
    for (auto& members : by_class) {
        if (members.empty()) continue;
        if (static_cast<int>(members.size()) < folds)
            throw InputError("fold count " + std::to_string(folds) +
                             " exceeds the smallest class size " + std::to_string(members.size()));
        std::shuffle(members.begin(), members.end(), rng);
        for (std::size_t k = 0; k < members.size(); ++k)
            fold_of[members[k]] = static_cast<int>(k % static_cast<std::size_t>(folds));
    }
    return fold_of;
}

double cross_validated_accuracy(std::span<const LabelledFeature> data, std::span<const int> fold_of,
                                int folds, const SvmParams& params) {
    long correct = 0;
    std::vector<LabelledFeature> train;
    train.reserve(data.size());
    for (int k = 0; k < folds; ++k) {
        train.clear();
        for (std::size_t i = 0; i < data.size(); ++i)
            if (fold_of[i] != k) train.push_back(data[i]);
        const SvmModel model = svm_train(train, params);
        for (std::size_t i = 0; i < data.size(); ++i)
            if (fold_of[i] == k && model.predict(data[i].x) == data[i].label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(data.size());
}

std::vector<double> default_gamma_grid() {
    std::vector<double> g;
    for (int i = 5; i <= 14; ++i) g.push_back(i / 10.0);
    return g;
}

std::vector<double> default_cost_grid() {
    std::vector<double> c;
    for (int e = -3; e <= 4; ++e) c.push_back(std::pow(10.0, e));
    return c;
}

GridSweepResult grid_sweep(std::span<const LabelledFeature> data,
                           const std::vector<double>& gamma_grid,
                           const std::vector<double>& cost_grid, int folds, std::uint64_t seed,
                           const SvmParams& base) {
    if (gamma_grid.empty() || cost_grid.empty()) throw InputError("parameter grids must be non-empty");
    const auto fold_of = stratified_folds(data, folds, seed);

    GridSweepResult r;
    r.gamma_grid = gamma_grid;
    r.cost_grid = cost_grid;
    r.accuracy.resize(static_cast<Eigen::Index>(cost_grid.size()),
                      static_cast<Eigen::Index>(gamma_grid.size()));
    for (std::size_t ci = 0; ci < cost_grid.size(); ++ci) {
        for (std::size_t gi = 0; gi < gamma_grid.size(); ++gi) {
            SvmParams p = base;
            p.cost = cost_grid[ci];
            p.gamma = gamma_grid[gi];
            p.seed = seed;
            r.accuracy(static_cast<Eigen::Index>(ci), static_cast<Eigen::Index>(gi)) =
                cross_validated_accuracy(data, fold_of, folds, p);
        }
    }
    select_best_cell(r);
    return r;
}

void select_best_cell(GridSweepResult& r) {
    if (r.accuracy.rows() != static_cast<Eigen::Index>(r.cost_grid.size()) ||
        r.accuracy.cols() != static_cast<Eigen::Index>(r.gamma_grid.size()) || r.accuracy.size() == 0)
        throw InputError("accuracy table does not match the parameter grids");
    r.best_accuracy = -1.0;
    for (std::size_t ci = 0; ci < r.cost_grid.size(); ++ci) {
        for (std::size_t gi = 0; gi < r.gamma_grid.size(); ++gi) {
            const double acc = r.accuracy(static_cast<Eigen::Index>(ci), static_cast<Eigen::Index>(gi));
            const double cost = r.cost_grid[ci], gamma = r.gamma_grid[gi];
            const bool better =
                acc > r.best_accuracy ||
                (acc == r.best_accuracy &&
                 (cost < r.best_cost || (cost == r.best_cost && gamma < r.best_gamma)));
            if (better) {
                r.best_accuracy = acc;
                r.best_cost = cost;
                r.best_gamma = gamma;
            }
        }
    }
}

namespace {

int class_count_of(std::span<const LabelledFeature> a, std::span<const LabelledFeature> b) {
    int m = -1;
    for (const auto& f : a) m = std::max(m, f.label);
    for (const auto& f : b) m = std::max(m, f.label);
    return m + 1;
}

}  // namespace

ConfusionMatrix baseline_1nn(std::span<const LabelledFeature> train,
                             std::span<const LabelledFeature> test) {
    if (train.empty()) throw InputError("nearest-neighbour baseline needs training data");
    ConfusionMatrix cm(class_count_of(train, test));
    for (const auto& q : test) {
        double best = std::numeric_limits<double>::infinity();
        int label = 0;
        for (const auto& t : train) {
            const double d = std::abs(t.x - q.x);
            if (d < best || (d == best && t.label < label)) {
                best = d;
                label = t.label;
            }
        }
        cm.add(q.label, label);
    }
    return cm;
}

ConfusionMatrix baseline_centroid(std::span<const LabelledFeature> train,
                                  std::span<const LabelledFeature> test) {
    const int classes = class_count_of(train, test);
    std::vector<double> sum(static_cast<std::size_t>(classes), 0.0);
    std::vector<long> count(static_cast<std::size_t>(classes), 0);
    for (const auto& t : train) {
        sum[static_cast<std::size_t>(t.label)] += t.x;
        ++count[static_cast<std::size_t>(t.label)];
    }
    for (int c = 0; c < classes; ++c)
        if (count[static_cast<std::size_t>(c)] == 0)
            throw InputError("nearest-centroid baseline: class " + std::to_string(c) +
                             " has no training samples");
    ConfusionMatrix cm(classes);
    for (const auto& q : test) {
        int label = 0;
        double best = std::numeric_limits<double>::infinity();
        for (int c = 0; c < classes; ++c) {
            const double d = std::abs(sum[static_cast<std::size_t>(c)] / count[static_cast<std::size_t>(c)] - q.x);
            if (d < best) {
                best = d;
                label = c;
            }
        }
        cm.add(q.label, label);
    }
    return cm;
}

}  // namespace oilspec
