#pragma once

#include <nlohmann/json.hpp>

#include "oilspec/classifier.hpp"
#include "oilspec/features.hpp"
#include "oilspec/pipeline.hpp"
#include "oilspec/sclust.hpp"
#include "oilspec/svm.hpp"
#include "oilspec/synth.hpp"

namespace oilspec {

/// Stamped into every JSON document as "schema_version".
inline constexpr int kSchemaVersion = 1;

using json = nlohmann::json;

json matrix_to_json(const Eigen::MatrixXd& m);  // {"rows","cols","data" row-major}
Eigen::MatrixXd matrix_from_json(const json& j);

void to_json(json& j, const GaussianStats& g);
void from_json(const json& j, GaussianStats& g);
void to_json(json& j, const FdaProjection& p);
void from_json(const json& j, FdaProjection& p);
void to_json(json& j, const SvmModel& m);
void from_json(const json& j, SvmModel& m);
void to_json(json& j, const TrainedPipeline& t);
void from_json(const json& j, TrainedPipeline& t);
void to_json(json& j, const SynthConfig& c);
void from_json(const json& j, SynthConfig& c);

json to_json(const GridSweepResult& r);
/// {overall_accuracy, per_class_accuracy, heated_only_accuracy, pure_vs_heated_accuracy, ...}
json metrics_json(const Evaluation& e);
json cluster_report_json(const ClusterRun& run);

}  // namespace oilspec
