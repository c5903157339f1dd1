#include "oilspec/pipeline.hpp"

#include <algorithm>
#include <string>

#include "oilspec/error.hpp"
#include "oilspec/linalg.hpp"

namespace oilspec {

GaussianStats ReferenceBank::mixture(const std::map<int, double>& weights) const {
    if (weights.empty()) throw InputError("reference mixture needs at least one trial");
    if (weights.size() == 1) {
        const auto it = by_trial.find(weights.begin()->first);
        if (it == by_trial.end())
            throw InputError("no class-0 reference for trial " + std::to_string(weights.begin()->first));
        return it->second;
    }
    GaussianStats out;
    Eigen::MatrixXd second;
    for (const auto& [trial, w] : weights) {
        const auto it = by_trial.find(trial);
        if (it == by_trial.end())
            throw InputError("no class-0 reference for trial " + std::to_string(trial));
        const GaussianStats& g = it->second;
        if (out.mean.size() == 0) {
            out.mean = Eigen::VectorXd::Zero(g.dim());
            second = Eigen::MatrixXd::Zero(g.dim(), g.dim());
        }
        out.mean += w * g.mean;
        second += w * (g.covariance + g.mean * g.mean.transpose());
        out.sample_count += g.sample_count;
    }
    Eigen::MatrixXd cov = second - out.mean * out.mean.transpose();
    cov = 0.5 * (cov + cov.transpose());
    auto reg = linalg::regularize_covariance(cov);
    out.covariance = std::move(reg.matrix);
    out.regularized = reg.applied;
    out.regularization = reg.lambda;
    return out;
}

GaussianStats ReferenceBank::for_rows(const SignatureSet& rows) const {
    std::map<int, double> weights;
    for (int t : rows.trial) weights[t] += 1.0;
    for (auto& [t, w] : weights) w /= static_cast<double>(rows.size());
    return mixture(weights);
}

ReferenceBank build_references(const SignatureSet& signatures) {
    ReferenceBank bank;
    for (const auto& [trial, rows] : trial_subset_indices(signatures)) {
        std::vector<Eigen::Index> pure;
        for (Eigen::Index r : rows)
            if (signatures.reheat_class[r] == 0) pure.push_back(r);
        if (pure.empty()) continue;
        if (pure.size() < 2)
            throw InputError("trial " + std::to_string(trial) + " has fewer than 2 class-0 signatures");
        bank.by_trial.emplace(trial, fit_gaussian(signatures.select(pure)));
    }
    if (bank.by_trial.empty()) throw InputError("no class-0 (pure oil) signatures to use as reference");
    return bank;
}

std::vector<SetFeature> set_features(const SignatureSet& space, const LabelledSetPartition& partition,
                                     const ReferenceBank& references) {
    std::vector<SetFeature> out;
    out.reserve(partition.sets.size());
    for (const auto& set : partition.sets) {
        const SignatureSet rows = space.select(set.members);
        SetFeature f;
        f.detail = bhattacharyya(fit_gaussian(rows), references.for_rows(rows));
        f.detail.target_id = "set-" + std::to_string(set.set_id);
        f.detail.reference_id = "class0";
        f.feature.x = f.detail.d_b;
        f.feature.label = set.reheat_class;
        f.feature.set_id = set.set_id;
        // majority trial of the set
        std::map<int, int> counts;
        for (int t : rows.trial) ++counts[t];
        f.feature.trial_id = std::max_element(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
                                 return a.second < b.second;
                             })->first;
        f.test = set.test;
        out.push_back(f);
    }
    return out;
}

PipelineReport run_training_pipeline(const SignatureSet& all, const PipelineConfig& config) {
    all.validate();
    if (all.with_class(0).empty()) throw InputError("class 0 (pure oil) is required for reference statistics");

    PipelineReport report;
    ReformOptions reform = config.reform;
    reform.seed = config.seed;
    report.partition = reform_labelled_sets(all, reform);

    SignatureSet space = all;
    if (config.fda_dim > 0) {
        std::vector<Eigen::Index> train_rows;
        for (const auto* s : report.partition.train())
            train_rows.insert(train_rows.end(), s->members.begin(), s->members.end());
        report.trained.fda = fit_fda(all.select(train_rows), config.fda_dim);
        space = project(*report.trained.fda, all);
    }
    report.trained.references = build_references(space);
    report.features = set_features(space, report.partition, report.trained.references);

    std::vector<LabelledFeature> train, test;
    for (const auto& f : report.features) (f.test ? test : train).push_back(f.feature);
    if (train.empty() || test.empty()) throw InputError("both train and test splits must be non-empty");

    report.grid = grid_sweep(train, config.gamma_grid, config.cost_grid, config.folds, config.seed, config.svm);
    SvmParams final_params = config.svm;
    final_params.gamma = report.grid.best_gamma;
    final_params.cost = report.grid.best_cost;
    final_params.seed = config.seed;
    report.trained.model = svm_train(train, final_params);
    report.trained.model.folds = config.folds;

    report.train = evaluate(report.trained.model, train);
    report.test = evaluate(report.trained.model, test);
    report.nearest_neighbor = baseline_1nn(train, test);
    report.nearest_centroid = baseline_centroid(train, test);
    return report;
}

std::vector<SetPrediction> predict_sets(const TrainedPipeline& trained, const SignatureSet& signatures,
                                        int set_size) {
    signatures.validate();
    if (set_size < 0) throw InputError("set size must be >= 0");
    SignatureSet space = trained.fda ? project(*trained.fda, signatures) : signatures;

    ReferenceBank bank = trained.references;
    std::map<int, bool> have_input_reference;
    std::vector<std::pair<int, int>> order;
    std::map<std::pair<int, int>, std::vector<Eigen::Index>> groups;
    for (Eigen::Index i = 0; i < space.size(); ++i) {
        const std::pair<int, int> key{space.trial[i], space.reheat_class[i]};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(i);
    }
    for (const auto& [key, rows] : groups) {
        if (key.second != 0 || bank.by_trial.count(key.first)) continue;
        if (rows.size() >= 2) bank.by_trial.emplace(key.first, fit_gaussian(space.select(rows)));
    }

    std::vector<SetPrediction> out;
    for (const auto& key : order) {
        const auto& rows = groups[key];
        if (!bank.by_trial.count(key.first))
            throw InputError("no class-0 reference available for trial " + std::to_string(key.first));
        const std::size_t chunk = set_size == 0 ? rows.size() : static_cast<std::size_t>(set_size);
        for (std::size_t start = 0; start < rows.size(); start += chunk) {
            const std::size_t end = std::min(rows.size(), start + chunk);
            if (end - start < 2) continue;
            std::vector<Eigen::Index> members(rows.begin() + static_cast<std::ptrdiff_t>(start),
                                              rows.begin() + static_cast<std::ptrdiff_t>(end));
            const SignatureSet set = space.select(members);
            SetPrediction p;
            p.set_index = static_cast<int>(out.size());
            p.trial = key.first;
            p.reheat_class = key.second;
            p.size = set.size();
            p.d_b = bhattacharyya(fit_gaussian(set), bank.by_trial.at(key.first)).d_b;
            p.predicted = trained.model.predict(p.d_b);
            out.push_back(p);
        }
    }
    return out;
}

ClusterRun cluster_signatures(const SignatureSet& set, const ClusterConfig& config, int trial) {
    set.validate();
    ClusterRun run;
    run.trial = trial;
    run.rows = subsample_per_class(set, config.subsample, config.seed);
    const SignatureSet sample = set.select(run.rows);

    SweepOptions sweep_options;
    sweep_options.modes = config.modes;
    sweep_options.method = config.method;
    run.sweep = sigma_sweep(sample.values, config.sigmas, sweep_options);
    run.selection = select_mode(run.sweep, config.algorithm);
    run.sweep.selected_mode = run.selection.mode;
    run.sweep.dominant_sigma = run.selection.sigma;

    ClusterOptions cluster_options;
    cluster_options.seed = config.seed;
    cluster_options.restarts = config.restarts;
    cluster_options.method = config.method;
    run.report = spectral_cluster(sample.values, run.selection.mode, run.selection.sigma, cluster_options);
    run.report.algorithm = config.algorithm;
    critical_classes(run.report, sample.reheat_class);
    return run;
}

std::vector<ClusterRun> cluster_by_trial(const SignatureSet& all, const ClusterConfig& config,
                                         bool amalgamate) {
    std::vector<ClusterRun> runs;
    if (amalgamate) {
        runs.push_back(cluster_signatures(all, config, -1));
        return runs;
    }
    for (const auto& [trial, rows] : trial_subset_indices(all)) {
        ClusterRun run = cluster_signatures(all.select(rows), config, trial);
        for (auto& r : run.rows) r = rows[static_cast<std::size_t>(r)];
        runs.push_back(std::move(run));
    }
    return runs;
}

}  // namespace oilspec
