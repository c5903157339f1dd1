#include <random>

#include <gtest/gtest.h>

#include "oilspec/error.hpp"
#include "oilspec/serialize.hpp"

using namespace oilspec;

TEST(Json, MatrixRoundTrip) {
    Eigen::MatrixXd m(2, 3);
    m << 1, 2, 3, 4, 5, 6.25;
    const auto j = matrix_to_json(m);
    EXPECT_EQ(j["data"][2], 3);
    EXPECT_EQ(matrix_from_json(j), m);
    json bad = j;
    bad["rows"] = 5;
    EXPECT_THROW(matrix_from_json(bad), InputError);
}

TEST(Json, GaussianAndFdaRoundTrip) {
    Eigen::MatrixXd rows = Eigen::MatrixXd::Random(20, 3);
    const auto g = fit_gaussian(rows);
    const GaussianStats back = json(g).get<GaussianStats>();
    EXPECT_EQ(back.mean, g.mean);
    EXPECT_EQ(back.covariance, g.covariance);
    EXPECT_EQ(back.sample_count, 20);

    FdaProjection p;
    p.basis = Eigen::MatrixXd::Random(4, 2);
    p.ratios = Eigen::Vector2d(3, 1);
    const FdaProjection pb = json(p).get<FdaProjection>();
    EXPECT_EQ(pb.basis, p.basis);
    EXPECT_EQ(pb.ratios, p.ratios);
}

TEST(Json, SvmModelRoundTripPredictsIdentically) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0, 1);
    std::vector<LabelledFeature> d;
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 20; ++i) d.push_back({2.0 * c + n(rng), c});
    const auto m = svm_train(d, {.gamma = 0.9, .cost = 10});
    const json j = m;
    EXPECT_EQ(j["kernel"], "rbf");
    const SvmModel back = j.get<SvmModel>();
    for (int i = 0; i < 200; ++i) {
        const double x = -3 + 0.05 * i;
        EXPECT_EQ(back.predict(x), m.predict(x));
        EXPECT_EQ(back.decision(back.machines[1], x), m.decision(m.machines[1], x));
    }
}

TEST(Json, TrainedPipelineCarriesSchemaVersion) {
    SynthConfig cfg;
    cfg.trials = 2;
    cfg.per_class_per_trial = 60;
    const auto data = generate(cfg);
    PipelineConfig p;
    p.reform = {.sets_per_class = 6, .set_size = 20, .test_fraction = 0.34, .seed = 0};
    p.gamma_grid = {1.0};
    p.cost_grid = {10};
    p.folds = 2;
    const auto report = run_training_pipeline(data.signatures, p);
    const json j = report.trained;
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    const TrainedPipeline back = j.get<TrainedPipeline>();
    EXPECT_EQ(back.references.by_trial.size(), 2u);
    EXPECT_FALSE(back.fda.has_value());
    const auto a = predict_sets(report.trained, data.signatures, 20);
    const auto b = predict_sets(back, data.signatures, 20);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].predicted, b[i].predicted);

    json wrong = j;
    wrong["schema_version"] = 99;
    EXPECT_THROW(wrong.get<TrainedPipeline>(), InputError);
}

TEST(Json, SynthConfigPartialOverride) {
    const json j = {{"trials", 3}, {"critical", {1, 2, 4}}, {"boost", 10.0}};
    const SynthConfig c = j.get<SynthConfig>();
    EXPECT_EQ(c.trials, 3);
    EXPECT_EQ(c.classes, 6);
    EXPECT_EQ(c.critical, (std::set<int>{1, 2, 4}));
    const json bad = {{"critical", {7}}};
    EXPECT_THROW(bad.get<SynthConfig>(), InputError);
    const SynthConfig round = json(c).get<SynthConfig>();
    EXPECT_EQ(round.boost, 10.0);
}

TEST(Json, MetricsDocument) {
    ConfusionMatrix cm(3);
    cm.add(0, 0);
    cm.add(1, 2);
    cm.add(2, 2);
    const auto j = metrics_json(summarize(cm));
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    EXPECT_DOUBLE_EQ(j["overall_accuracy"].get<double>(), 2.0 / 3.0);
    EXPECT_EQ(j["pure_vs_heated_accuracy"], 1.0);
    EXPECT_EQ(j["confusion"][1][2], 1);
}
