#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oilspec/error.hpp"
#include "oilspec/svm.hpp"

using namespace oilspec;

namespace {

std::vector<LabelledFeature> separable() {
    std::vector<LabelledFeature> d;
    for (double x : {0.0, 0.1, 0.2}) d.push_back({x, 0});
    for (double x : {10.0, 10.1, 10.2}) d.push_back({x, 1});
    return d;
}

std::vector<LabelledFeature> overlapping(int classes, int per_class, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0, 1);
    std::vector<LabelledFeature> d;
    for (int c = 0; c < classes; ++c)
        for (int i = 0; i < per_class; ++i) d.push_back({1.5 * c + n(rng), c});
    return d;
}

double training_accuracy(const SvmModel& m, const std::vector<LabelledFeature>& d) {
    int ok = 0;
    for (const auto& f : d) ok += m.predict(f.x) == f.label;
    return static_cast<double>(ok) / static_cast<double>(d.size());
}

}  // namespace

TEST(Svm, SeparableTrainingAccuracy) {
    const auto d = separable();
    const auto m = svm_train(d, {.gamma = 1, .cost = 10});
    EXPECT_EQ(training_accuracy(m, d), 1.0);
    EXPECT_EQ(svm_predict(m, 0.05), 0);
    EXPECT_EQ(svm_predict(m, 10.15), 1);
}

TEST(Svm, IndistinguishableClasses) {
    std::vector<LabelledFeature> d;
    for (int i = 0; i < 4; ++i) {
        d.push_back({1.0, 0});
        d.push_back({1.0, 1});
    }
    const auto m = svm_train(d, {});
    EXPECT_EQ(training_accuracy(m, d), 0.5);
}

TEST(Svm, DuplicatingDataLeavesDecisionUnchanged) {
    const auto d = separable();
    auto dd = d;
    dd.insert(dd.end(), d.begin(), d.end());
    const SvmParams p{.gamma = 1, .cost = 1000, .tolerance = 1e-9};
    const auto a = svm_train(d, p);
    const auto b = svm_train(dd, p);
    for (int i = 0; i < 100; ++i) {
        const double x = -2 + 0.14 * i;
        EXPECT_NEAR(a.decision(a.machines[0], x), b.decision(b.machines[0], x), 1e-6);
    }
}

TEST(Svm, BoxEqualityAndMarginInvariants) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto d = overlapping(4, 25, seed);
        const SvmParams p{.gamma = 0.8, .cost = 5};
        const auto m = svm_train(d, p);
        ASSERT_EQ(m.machines.size(), 6u);
        for (const auto& mc : m.machines) {
            double eq = 0;
            for (std::size_t i = 0; i < mc.alpha.size(); ++i) {
                EXPECT_GT(mc.alpha[i], 0.0);
                EXPECT_LE(mc.alpha[i], p.cost + 1e-12);
                eq += mc.alpha[i] * mc.sign[i];
            }
            EXPECT_NEAR(eq, 0.0, 1e-8);
            EXPECT_TRUE(mc.converged);
            for (const auto& f : d) {
                if (f.label != mc.positive_class && f.label != mc.negative_class) continue;
                const double z = m.standardize(f.x);
                bool is_support = false;
                for (double s : mc.support) is_support = is_support || s == z;
                if (is_support) continue;
                const double y = f.label == mc.positive_class ? 1.0 : -1.0;
                EXPECT_GE(y * m.decision(mc, f.x), 1.0 - 1e-3);
            }
        }
    }
}

TEST(Svm, OrderedDisjointClassesGiveMonotoneSteps) {
    std::vector<LabelledFeature> d;
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 10; ++i) d.push_back({5.0 * c + 0.2 * i, c});
    const auto m = svm_train(d, {.gamma = 1, .cost = 100});
    int previous = 0;
    for (int i = 0; i < 1000; ++i) {
        const int y = m.predict(-1 + 0.018 * i);
        EXPECT_GE(y, previous);
        previous = y;
    }
}

TEST(Svm, FarProbeIsStableAcrossSeeds) {
    const auto d = overlapping(3, 30, 5);
    int first = -1;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        SvmParams p;
        p.seed = seed;
        const int y = svm_train(d, p).predict(1e3);
        if (first < 0) first = y;
        EXPECT_EQ(y, first);
    }
}

TEST(Svm, VoteTieGoesToSmallerClass) {
    SvmModel m;
    m.class_count = 3;
    // each machine always votes for a different class: 0 beats 1, 1 beats 2, 2 beats 0
    auto constant = [](int pos, int neg, double bias) {
        PairMachine mc;
        mc.positive_class = pos;
        mc.negative_class = neg;
        mc.bias = bias;
        return mc;
    };
    m.machines = {constant(0, 1, 1.0), constant(0, 2, -1.0), constant(1, 2, 1.0)};
    EXPECT_EQ(m.votes(0.0), (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(m.predict(0.0), 0);
    // decision exactly zero votes for the smaller class
    m.machines = {constant(0, 1, 0.0)};
    m.class_count = 2;
    EXPECT_EQ(m.predict(3.0), 0);
}

TEST(Svm, RejectsBadInput) {
    std::vector<LabelledFeature> one{{0.0, 0}, {1.0, 0}};
    EXPECT_THROW(svm_train(one, {}), InputError);
    std::vector<LabelledFeature> gap{{0.0, 0}, {1.0, 2}};
    EXPECT_THROW(svm_train(gap, {}), InputError);
    std::vector<LabelledFeature> nan{{std::nan(""), 0}, {1.0, 1}};
    EXPECT_THROW(svm_train(nan, {}), InputError);
    EXPECT_THROW(svm_train(separable(), {.gamma = 0}), InputError);
    const auto m = svm_train(separable(), {});
    EXPECT_THROW((void)m.predict(std::nan("")), InputError);
}
