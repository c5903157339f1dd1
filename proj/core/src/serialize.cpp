#include "oilspec/serialize.hpp"

#include <string>

#include "oilspec/error.hpp"

namespace oilspec {

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("JSON document is missing '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("JSON field '") + key + "': " + e.what());
    }
}

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Eigen::VectorXd vector_from(const json& j) {
    const auto v = j.get<std::vector<double>>();
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json matrix_to_json(const Eigen::MatrixXd& m) {
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Eigen::MatrixXd matrix_from_json(const json& j) {
    const auto rows = field<Eigen::Index>(j, "rows");
    const auto cols = field<Eigen::Index>(j, "cols");
    const auto data = field<std::vector<double>>(j, "data");
    if (rows < 0 || cols < 0 || static_cast<std::size_t>(rows * cols) != data.size())
        throw InputError("matrix JSON has inconsistent shape");
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)];
    return m;
}

void to_json(json& j, const GaussianStats& g) {
    j = {{"dim", g.dim()},
         {"mean", vector_json(g.mean)},
         {"covariance", matrix_to_json(g.covariance)},
         {"sample_count", g.sample_count},
         {"regularized", g.regularized},
         {"regularization", g.regularization}};
}

void from_json(const json& j, GaussianStats& g) {
    g.mean = vector_from(j.at("mean"));
    g.covariance = matrix_from_json(j.at("covariance"));
    g.sample_count = field<Eigen::Index>(j, "sample_count");
    g.regularized = field<bool>(j, "regularized");
    g.regularization = field<double>(j, "regularization");
    if (g.covariance.rows() != g.mean.size() || g.covariance.cols() != g.mean.size())
        throw InputError("Gaussian JSON: covariance does not match mean dimension");
}

void to_json(json& j, const FdaProjection& p) {
    j = {{"input_dim", p.input_dim()},
         {"output_dim", p.output_dim()},
         {"basis", matrix_to_json(p.basis)},
         {"ratios", vector_json(p.ratios)},
         {"regularized", p.within_regularized}};
}

void from_json(const json& j, FdaProjection& p) {
    p.basis = matrix_from_json(j.at("basis"));
    p.ratios = vector_from(j.at("ratios"));
    p.within_regularized = field<bool>(j, "regularized");
    if (p.ratios.size() != p.basis.cols()) throw InputError("FDA JSON: ratio count does not match basis");
}

void to_json(json& j, const SvmModel& m) {
    json machines = json::array();
    for (const auto& pm : m.machines) {
        machines.push_back({{"positive_class", pm.positive_class},
                            {"negative_class", pm.negative_class},
                            {"support", pm.support},
                            {"alpha", pm.alpha},
                            {"sign", pm.sign},
                            {"bias", pm.bias},
                            {"iterations", pm.iterations},
                            {"converged", pm.converged}});
    }
    j = {{"kernel", "rbf"},
         {"gamma", m.gamma},
         {"cost", m.cost},
         {"class_count", m.class_count},
         {"standardization", {{"mean", m.feature_mean}, {"scale", m.feature_scale}}},
         {"tolerance", m.tolerance},
         {"seed", m.seed},
         {"folds", m.folds},
         {"machines", machines}};
}

void from_json(const json& j, SvmModel& m) {
    m.gamma = field<double>(j, "gamma");
    m.cost = field<double>(j, "cost");
    m.class_count = field<int>(j, "class_count");
    m.feature_mean = field<double>(j.at("standardization"), "mean");
    m.feature_scale = field<double>(j.at("standardization"), "scale");
    m.tolerance = field<double>(j, "tolerance");
    m.seed = field<std::uint64_t>(j, "seed");
    m.folds = field<int>(j, "folds");
    if (!(m.gamma > 0.0) || !(m.cost > 0.0) || m.class_count < 2 || !(m.feature_scale > 0.0))
        throw InputError("SVM JSON has invalid parameters");
    m.machines.clear();
    for (const auto& jm : j.at("machines")) {
        PairMachine pm;
        pm.positive_class = field<int>(jm, "positive_class");
        pm.negative_class = field<int>(jm, "negative_class");
        pm.support = field<std::vector<double>>(jm, "support");
        pm.alpha = field<std::vector<double>>(jm, "alpha");
        pm.sign = field<std::vector<int>>(jm, "sign");
        pm.bias = field<double>(jm, "bias");
        pm.iterations = field<long>(jm, "iterations");
        pm.converged = field<bool>(jm, "converged");
        if (pm.alpha.size() != pm.support.size() || pm.sign.size() != pm.support.size())
            throw InputError("SVM JSON: support arrays differ in length");
        m.machines.push_back(std::move(pm));
    }
    const auto expected = static_cast<std::size_t>(m.class_count * (m.class_count - 1) / 2);
    if (m.machines.size() != expected) throw InputError("SVM JSON: wrong number of pair machines");
}

void to_json(json& j, const TrainedPipeline& t) {
    json refs = json::object();
    for (const auto& [trial, g] : t.references.by_trial) refs[std::to_string(trial)] = g;
    j = {{"schema_version", kSchemaVersion},
         {"references", refs},
         {"fda", t.fda ? json(*t.fda) : json(nullptr)},
         {"svm", t.model}};
}

void from_json(const json& j, TrainedPipeline& t) {
    if (field<int>(j, "schema_version") != kSchemaVersion) throw InputError("unsupported model schema version");
    t.references.by_trial.clear();
    for (const auto& [key, value] : j.at("references").items())
        t.references.by_trial.emplace(std::stoi(key), value.get<GaussianStats>());
    if (j.at("fda").is_null())
        t.fda.reset();
    else
        t.fda = j.at("fda").get<FdaProjection>();
    t.model = j.at("svm").get<SvmModel>();
}

void to_json(json& j, const SynthConfig& c) {
    j = {{"trials", c.trials},
         {"classes", c.classes},
         {"per_class_per_trial", c.per_class_per_trial},
         {"bands", c.bands},
         {"base_spectrum", vector_json(c.resolved_base())},
         {"drift_direction", vector_json(c.resolved_direction())},
         {"step", c.step},
         {"within_covariance", matrix_to_json(c.resolved_covariance())},
         {"inflation", c.inflation},
         {"trial_jitter", c.trial_jitter},
         {"trial_offset_sd", c.trial_offset_sd},
         {"critical", c.critical},
         {"boost", c.boost},
         {"seed", c.seed}};
}

void from_json(const json& j, SynthConfig& c) {
    c = SynthConfig{};
    auto opt = [&](const char* key, auto& target) {
        if (j.contains(key)) target = field<std::decay_t<decltype(target)>>(j, key);
    };
    opt("trials", c.trials);
    opt("classes", c.classes);
    opt("per_class_per_trial", c.per_class_per_trial);
    opt("bands", c.bands);
    opt("step", c.step);
    opt("within_sd", c.within_sd);
    opt("inflation", c.inflation);
    opt("trial_jitter", c.trial_jitter);
    opt("trial_offset_sd", c.trial_offset_sd);
    opt("critical", c.critical);
    opt("boost", c.boost);
    opt("seed", c.seed);
    if (j.contains("base_spectrum")) c.base_spectrum = vector_from(j.at("base_spectrum"));
    if (j.contains("drift_direction")) c.drift_direction = vector_from(j.at("drift_direction"));
    if (j.contains("within_covariance")) c.within_covariance = matrix_from_json(j.at("within_covariance"));
    c.validate();
}

json to_json(const GridSweepResult& r) {
    return {{"schema_version", kSchemaVersion},
            {"best_gamma", r.best_gamma},
            {"best_cost", r.best_cost},
            {"best_accuracy", r.best_accuracy},
            {"gamma_grid", r.gamma_grid},
            {"cost_grid", r.cost_grid},
            {"accuracy", matrix_to_json(r.accuracy)}};
}

json metrics_json(const Evaluation& e) {
    json per_class = json::array();
    for (const auto& a : e.per_class_accuracy) per_class.push_back(optional_json(a));
    json confusion = json::array();
    for (int t = 0; t < e.confusion.classes(); ++t) {
        json row = json::array();
        for (int p = 0; p < e.confusion.classes(); ++p) row.push_back(e.confusion.at(t, p));
        confusion.push_back(row);
    }
    return {{"schema_version", kSchemaVersion},
            {"overall_accuracy", e.fraction_correct},
            {"macro_accuracy", e.macro_accuracy},
            {"per_class_accuracy", per_class},
            {"heated_only_accuracy", optional_json(e.heated_only_accuracy)},
            {"pure_vs_heated_accuracy", optional_json(e.pure_vs_heated_accuracy)},
            {"sample_count", e.confusion.total()},
            {"confusion", confusion}};
}

json cluster_report_json(const ClusterRun& run) {
    json classes = json::array();
    for (const auto& c : run.report.classes)
        classes.push_back({{"reheat_class", c.reheat_class},
                           {"majority_cluster", c.majority_cluster},
                           {"purity", c.purity},
                           {"tied", c.tied}});
    return {{"schema_version", kSchemaVersion},
            {"trial", run.trial < 0 ? json("amalgamated") : json(run.trial)},
            {"algorithm", run.report.algorithm ? to_string(*run.report.algorithm) : "none"},
            {"prominent_mode", run.selection.mode},
            {"dominant_sigma", run.selection.sigma},
            {"mode_scores", run.selection.scores},
            {"mode_range", {run.sweep.modes.first, run.sweep.modes.last}},
            {"cluster_count", run.report.cluster_count},
            {"inertia", run.report.inertia},
            {"assignments", run.report.assignment},
            {"classes", classes},
            {"critical", run.report.critical}};
}

}  // namespace oilspec
