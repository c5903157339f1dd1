#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "oilspec/svm.hpp"

namespace oilspec {

struct BinaryCounts {
    long tp = 0, tn = 0, fp = 0, fn = 0;
};

/// (TP + TN) / (TP + TN + FP + FN).
double binary_accuracy(const BinaryCounts& c);

/// C x C counts, rows = true class, columns = predicted class.
class ConfusionMatrix {
public:
    explicit ConfusionMatrix(int classes);

    void add(int truth, int predicted);
    [[nodiscard]] int classes() const { return static_cast<int>(counts_.rows()); }
    [[nodiscard]] long at(int truth, int predicted) const { return counts_(truth, predicted); }
    [[nodiscard]] long total() const { return counts_.sum(); }
    [[nodiscard]] long correct() const { return counts_.trace(); }
    [[nodiscard]] long row_total(int truth) const { return counts_.row(truth).sum(); }
    /// One-vs-rest counts for class c.
    [[nodiscard]] BinaryCounts one_vs_rest(int c) const;
    [[nodiscard]] const Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>& counts() const {
        return counts_;
    }

private:
    Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic> counts_;
};

/// Header `true_class,pred_0,..,pred_{C-1}`.
void write_confusion_csv(std::ostream& out, const ConfusionMatrix& cm);

struct Evaluation {
    ConfusionMatrix confusion{2};
    double fraction_correct = 0.0;          ///< trace / total
    double macro_accuracy = 0.0;            ///< mean over classes of one-vs-rest accuracy
    std::vector<std::optional<double>> per_class_accuracy;  ///< recall; empty class -> nullopt
    std::optional<double> heated_only_accuracy;             ///< fraction correct over true class >= 1
    std::optional<double> pure_vs_heated_accuracy;          ///< labels collapsed to {0, >=1}
};

Evaluation summarize(const ConfusionMatrix& cm);
Evaluation evaluate(const SvmModel& model, std::span<const LabelledFeature> data);

/// Fold id per sample. Each class is shuffled with the seed and dealt round-robin.
/// Throws InputError when folds exceed the smallest class size.
std::vector<int> stratified_folds(std::span<const LabelledFeature> data, int folds,
                                  std::uint64_t seed);

struct GridSweepResult {
    double best_gamma = 0.0;
    double best_cost = 0.0;
    double best_accuracy = 0.0;
    std::vector<double> gamma_grid;
    std::vector<double> cost_grid;
    Eigen::MatrixXd accuracy;  ///< rows follow cost_grid, columns follow gamma_grid
};

/// gamma in {0.5, 0.6, ..., 1.4}.
std::vector<double> default_gamma_grid();
/// cost in {1e-3, 1e-2, ..., 1e4}.
std::vector<double> default_cost_grid();

/// Stratified k-fold CV accuracy for every (cost, gamma) cell. The best cell
/// is the highest accuracy, ties broken by smaller cost, then smaller gamma.
GridSweepResult grid_sweep(std::span<const LabelledFeature> data,
                           const std::vector<double>& gamma_grid,
                           const std::vector<double>& cost_grid, int folds, std::uint64_t seed,
                           const SvmParams& base = {});

/// Fills best_* from the accuracy table using the same tie-break as grid_sweep.
void select_best_cell(GridSweepResult& result);

/// Fraction of held-out predictions that are correct over all folds.
double cross_validated_accuracy(std::span<const LabelledFeature> data, std::span<const int> fold_of,
                                int folds, const SvmParams& params);

ConfusionMatrix baseline_1nn(std::span<const LabelledFeature> train,
                             std::span<const LabelledFeature> test);
ConfusionMatrix baseline_centroid(std::span<const LabelledFeature> train,
                                  std::span<const LabelledFeature> test);

}  // namespace oilspec
