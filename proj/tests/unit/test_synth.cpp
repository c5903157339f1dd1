#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "oilspec/error.hpp"
#include "oilspec/features.hpp"
#include "oilspec/synth.hpp"

using namespace oilspec;

namespace {

SynthConfig small_config() {
    SynthConfig c;
    c.trials = 2;
    c.per_class_per_trial = 90;
    return c;
}

}  // namespace

TEST(Generate, DefaultCounts) {
    const auto data = generate(SynthConfig{});
    EXPECT_EQ(data.signatures.size(), 48600);
    EXPECT_EQ(data.signatures.dim(), 9);
    for (int c = 0; c < 6; ++c) EXPECT_EQ(data.signatures.with_class(c).size(), 8100);
    const auto subsets = trial_subsets(data.signatures);
    ASSERT_EQ(subsets.size(), 9u);
    for (const auto& [t, s] : subsets) EXPECT_EQ(s.size(), 5400) << "trial " << t;
    EXPECT_EQ(data.critical_truth.at(0), (std::set<int>{1, 4}));
}

TEST(Generate, BitReproducibleAndTrialStreamsIndependent) {
    const auto cfg = small_config();
    const auto a = generate(cfg), b = generate(cfg);
    EXPECT_EQ(a.signatures.values, b.signatures.values);
    const auto t1 = generate_trial(cfg, 1);
    EXPECT_EQ(t1.values, a.signatures.with_trial(1).values);
    auto other = cfg;
    other.seed = 1;
    EXPECT_NE(generate(other).signatures.values, a.signatures.values);
}

TEST(Generate, ZeroDriftClassesAreIndistinguishable) {
    auto cfg = small_config();
    cfg.trials = 1;
    cfg.per_class_per_trial = 900;
    cfg.step = 0.0;
    cfg.inflation = 0.0;
    const auto data = generate(cfg);
    double total = 0;
    int pairs = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            total += bhattacharyya(fit_gaussian(data.signatures.with_class(i)),
                                   fit_gaussian(data.signatures.with_class(j)))
                         .d_b;
            ++pairs;
        }
    EXPECT_LE(total / pairs, 0.05);
}

TEST(Generate, DistanceToPureOilIncreasesWithClass) {
    auto cfg = small_config();
    cfg.trials = 1;
    cfg.per_class_per_trial = 900;
    const auto data = generate(cfg);
    const auto ref = fit_gaussian(data.signatures.with_class(0));
    double previous = -1;
    for (int c = 1; c < 6; ++c) {
        const double d = bhattacharyya(fit_gaussian(data.signatures.with_class(c)), ref).d_b;
        EXPECT_GT(d, previous);
        previous = d;
    }
}

TEST(Generate, ValidatesConfig) {
    SynthConfig c;
    c.critical = {0};
    EXPECT_THROW(c.validate(), InputError);
    c.critical = {6};
    EXPECT_THROW(c.validate(), InputError);
    c = {};
    c.trials = 0;
    EXPECT_THROW(c.validate(), InputError);
    c = {};
    c.within_covariance = -Eigen::MatrixXd::Identity(9, 9);
    EXPECT_THROW(c.validate(), InputError);
    c = {};
    c.base_spectrum = Eigen::VectorXd::Ones(4);
    EXPECT_THROW(c.validate(), InputError);
}

TEST(Reform, DefaultPartitionShape) {
    const auto data = generate(SynthConfig{});
    const auto part = reform_labelled_sets(data.signatures);
    EXPECT_EQ(part.sets.size(), 360u);
    EXPECT_EQ(part.train().size(), 6u * 48);
    EXPECT_EQ(part.test().size(), 6u * 12);
    std::set<Eigen::Index> seen;
    for (const auto& s : part.sets) {
        EXPECT_EQ(s.members.size(), 135u);
        for (auto r : s.members) {
            EXPECT_EQ(data.signatures.reheat_class[static_cast<std::size_t>(r)], s.reheat_class);
            EXPECT_TRUE(seen.insert(r).second) << "row " << r << " in two sets";
        }
    }
    EXPECT_EQ(seen.size(), 48600u);
}

TEST(Reform, DeterministicAndSeeded) {
    const auto data = generate(small_config());
    const ReformOptions opt{.sets_per_class = 6, .set_size = 30, .test_fraction = 0.2, .seed = 3};
    const auto a = reform_labelled_sets(data.signatures, opt);
    const auto b = reform_labelled_sets(data.signatures, opt);
    ASSERT_EQ(a.sets.size(), b.sets.size());
    for (std::size_t i = 0; i < a.sets.size(); ++i) {
        EXPECT_EQ(a.sets[i].members, b.sets[i].members);
        EXPECT_EQ(a.sets[i].test, b.sets[i].test);
    }
    // 6 sets per class, round(1.2) = 1 test set each
    EXPECT_EQ(a.test().size(), 6u);
}

TEST(Reform, RejectsInsufficientSignatures) {
    const auto data = generate(small_config());
    EXPECT_THROW(reform_labelled_sets(data.signatures, {.sets_per_class = 2, .set_size = 181}), InputError);
}

TEST(TrialSubsets, DisjointExhaustiveAndSingleTrial) {
    const auto data = generate(small_config());
    const auto idx = trial_subset_indices(data.signatures);
    std::vector<Eigen::Index> all;
    for (const auto& [t, rows] : idx) all.insert(all.end(), rows.begin(), rows.end());
    std::sort(all.begin(), all.end());
    ASSERT_EQ(static_cast<Eigen::Index>(all.size()), data.signatures.size());
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], static_cast<Eigen::Index>(i));

    const auto one = data.signatures.with_trial(1);
    const auto subsets = trial_subsets(one);
    ASSERT_EQ(subsets.size(), 1u);
    EXPECT_EQ(subsets.at(1).values, one.values);
}

TEST(Chemical, ShippedTableCriticalSets) {
    const auto records = load_chemical(std::filesystem::path(OILSPEC_DATA_DIR) / "chemical.csv");
    ASSERT_EQ(records.size(), 2u);
    EXPECT_EQ(records[0].trial, 0);
    EXPECT_EQ(chemical_critical(records[0], ChemicalProperty::tbars), (std::set<int>{1, 4}));
    EXPECT_EQ(chemical_critical(records[0], ChemicalProperty::totox), (std::set<int>{1, 2, 4}));
    EXPECT_EQ(chemical_critical(records[1], ChemicalProperty::tbars), (std::set<int>{1, 5}));
    EXPECT_EQ(chemical_critical(records[1], ChemicalProperty::totox), (std::set<int>{1, 5}));
}

TEST(Chemical, NoFlagsAndMalformedInput) {
    std::istringstream ok("trial,class,tbars_pct,tbars_sig,totox_pct,totox_sig\n3,1,10,no,20,false\n");
    const auto r = load_chemical(ok);
    EXPECT_TRUE(chemical_critical(r.at(0), ChemicalProperty::tbars).empty());
    std::istringstream bad_header("trial,class\n");
    EXPECT_THROW(load_chemical(bad_header), InputError);
    std::istringstream bad_row("trial,class,tbars_pct,tbars_sig,totox_pct,totox_sig\n0,1,x,1,2,1\n");
    EXPECT_THROW(load_chemical(bad_row), InputError);
    EXPECT_THROW(parse_property("pv"), InputError);
    EXPECT_EQ(parse_property("TOTOX"), ChemicalProperty::totox);
}
