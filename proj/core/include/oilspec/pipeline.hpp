#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "oilspec/classifier.hpp"
#include "oilspec/features.hpp"
#include "oilspec/sclust.hpp"
#include "oilspec/signatures.hpp"
#include "oilspec/synth.hpp"

namespace oilspec {

/// Class-0 (pure oil) Gaussian per trial.
struct ReferenceBank {
    std::map<int, GaussianStats> by_trial;

    /// Moment-matched mixture of the listed trials' references, weights summing to 1.
    [[nodiscard]] GaussianStats mixture(const std::map<int, double>& weights) const;
    /// Reference matching the trial composition of `rows`.
    [[nodiscard]] GaussianStats for_rows(const SignatureSet& rows) const;
};

/// Throws InputError when a trial has fewer than 2 class-0 signatures.
ReferenceBank build_references(const SignatureSet& signatures);

struct PipelineConfig {
    ReformOptions reform;
    int fda_dim = 0;  ///< 0 keeps the raw band space
    std::vector<double> gamma_grid = default_gamma_grid();
    std::vector<double> cost_grid = default_cost_grid();
    int folds = 5;
    SvmParams svm;
    std::uint64_t seed = 0;
};

struct SetFeature {
    LabelledFeature feature;
    BhattacharyyaFeature detail;
    bool test = false;
};

/// Everything needed to score new signatures.
struct TrainedPipeline {
    ReferenceBank references;
    std::optional<FdaProjection> fda;
    SvmModel model;
};

struct PipelineReport {
    TrainedPipeline trained;
    LabelledSetPartition partition;
    std::vector<SetFeature> features;
    GridSweepResult grid;
    Evaluation train;
    Evaluation test;
    ConfusionMatrix nearest_neighbor{2};
    ConfusionMatrix nearest_centroid{2};
};

/// Gaussian fit -> (optional FDA) -> Bhattacharyya vs class-0 reference per
/// labelled set, then a CV grid sweep and a final SVM on the training sets.
PipelineReport run_training_pipeline(const SignatureSet& all, const PipelineConfig& config);

/// Features of every labelled set in `partition`.
std::vector<SetFeature> set_features(const SignatureSet& space, const LabelledSetPartition& partition,
                                     const ReferenceBank& references);

struct SetPrediction {
    int set_index = 0;
    int trial = 0;
    int reheat_class = 0;  ///< label carried by the input rows
    Eigen::Index size = 0;
    double d_b = 0.0;
    int predicted = 0;
};

/// Rows are grouped by (trial, class) in order of first appearance and cut
/// into chunks of `set_size` (0 = whole group); trailing chunks of >= 2 rows
/// are kept. Trials unknown to the model take their reference from class-0
/// rows in the input.
std::vector<SetPrediction> predict_sets(const TrainedPipeline& trained, const SignatureSet& signatures,
                                        int set_size);

struct ClusterConfig {
    std::vector<double> sigmas = default_sigma_grid();
    ModeRange modes;
    int subsample = 64;  ///< signatures per class; <= 0 uses all
    SelectionAlgorithm algorithm = SelectionAlgorithm::lbw;
    std::uint64_t seed = 0;
    int restarts = 50;
    linalg::EigenMethod method = linalg::EigenMethod::tridiagonal_qr;
};

struct ClusterRun {
    int trial = -1;  ///< -1 for an amalgamated run
    std::vector<Eigen::Index> rows;  ///< rows of the input that were clustered
    SweepResult sweep;
    ModeSelection selection;
    ClusterReport report;
};

/// Subsample, sigma sweep, mode selection, NJW clustering, critical classes.
ClusterRun cluster_signatures(const SignatureSet& set, const ClusterConfig& config, int trial = -1);

/// One run per trial, or a single run over everything when amalgamate is set.
/// ClusterRun::rows always index into `all`.
std::vector<ClusterRun> cluster_by_trial(const SignatureSet& all, const ClusterConfig& config,
                                         bool amalgamate);

}  // namespace oilspec
