#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace oilspec {

/// One scalar Bhattacharyya feature with its reheat-class label.
struct LabelledFeature {
    double x = 0.0;
    int label = 0;
    int trial_id = 0;
    int set_id = 0;
};

struct SvmParams {
    double gamma = 1.0;
    double cost = 1.0;
    double tolerance = 1e-3;       ///< KKT violation tolerance of the SMO stopping rule
    long max_iterations = 10'000'000;
    bool standardize = true;       ///< z-score the feature with training mean / sd
    std::uint64_t seed = 0;        ///< recorded only; training itself is deterministic
};

/// A binary soft-margin machine for the pair (positive_class, negative_class),
/// positive_class < negative_class. Supports are stored in standardized units.
struct PairMachine {
    int positive_class = 0;
    int negative_class = 1;
    std::vector<double> support;  ///< standardized feature values with alpha > 0
    std::vector<double> alpha;    ///< dual coefficients, 0 < alpha <= cost
    std::vector<int> sign;        ///< +1 for positive_class, -1 for negative_class
    double bias = 0.0;
    long iterations = 0;
    bool converged = true;
};

class SvmModel {
public:
    double gamma = 1.0;
    double cost = 1.0;
    int class_count = 0;
    double feature_mean = 0.0;
    double feature_scale = 1.0;
    std::vector<PairMachine> machines;  ///< ordered (0,1), (0,2), ..., (C-2,C-1)
    double tolerance = 1e-3;
    std::uint64_t seed = 0;
    int folds = 0;  ///< CV folds used to pick gamma/cost (0 when not swept)

    [[nodiscard]] double standardize(double x) const { return (x - feature_mean) / feature_scale; }
    /// f(x) of one pair machine; positive favours the pair's smaller class.
    [[nodiscard]] double decision(const PairMachine& m, double x) const;
    [[nodiscard]] std::vector<int> votes(double x) const;
    /// One-vs-one majority vote; ties go to the smaller class index.
    [[nodiscard]] int predict(double x) const;
};

/// Trains one-vs-one RBF machines, K(x,x') = exp(-gamma (x-x')^2), by SMO
/// with second-order working-set selection.
SvmModel svm_train(std::span<const LabelledFeature> data, const SvmParams& params);

int svm_predict(const SvmModel& model, double x);

}  // namespace oilspec
