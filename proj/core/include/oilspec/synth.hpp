#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "oilspec/signatures.hpp"

namespace oilspec {

/// Parameters of the planted reheat-drift generator. Class c of trial t is
/// Gaussian with mean base + offset_t + sum_{j<=c} step_j * direction and
/// covariance within * (1 + inflation * c), where step_j = step * (boost if j
/// is critical else 1) * (1 + trial_jitter * z_tj).
struct SynthConfig {
    int trials = 9;
    int classes = 6;
    int per_class_per_trial = 900;
    int bands = 9;
    Eigen::VectorXd base_spectrum;    ///< empty -> built-in 9-band transmittance shape
    Eigen::VectorXd drift_direction;  ///< normalised on use; empty -> built-in
    double step = 1.0;
    Eigen::MatrixXd within_covariance;  ///< empty -> within_sd^2 * I
    double within_sd = 1.0;
    double inflation = 0.05;
    double trial_jitter = 0.06;
    double trial_offset_sd = 3.0;
    std::set<int> critical = {1, 4};
    double boost = 4.0;
    std::uint64_t seed = 0;

    /// Throws InputError on non-positive counts, bad shapes, critical classes
    /// outside 1..C-1 or a covariance that is not positive definite.
    void validate() const;
    [[nodiscard]] Eigen::VectorXd resolved_base() const;
    [[nodiscard]] Eigen::VectorXd resolved_direction() const;
    [[nodiscard]] Eigen::MatrixXd resolved_covariance() const;
};

struct SyntheticDataset {
    SignatureSet signatures;  ///< trial-major, then class, then sample
    std::map<int, std::set<int>> critical_truth;  ///< trial -> planted critical classes
};

SyntheticDataset generate(const SynthConfig& config);
/// One trial only, reproducible on its own (same stream as within generate()).
SignatureSet generate_trial(const SynthConfig& config, int trial);

struct LabelledSet {
    int set_id = 0;
    int reheat_class = 0;
    std::vector<Eigen::Index> members;  ///< row indices into the source SignatureSet
    bool test = false;
};

struct LabelledSetPartition {
    std::vector<LabelledSet> sets;

    [[nodiscard]] std::vector<const LabelledSet*> train() const;
    [[nodiscard]] std::vector<const LabelledSet*> test() const;
};

struct ReformOptions {
    int sets_per_class = 60;
    int set_size = 135;
    double test_fraction = 0.2;
    std::uint64_t seed = 0;
};

/// Per class: rows grouped in ascending trial order, shuffled within each
/// trial block, then cut into contiguous sets. round(test_fraction * sets)
/// sets per class go to the test split.
LabelledSetPartition reform_labelled_sets(const SignatureSet& all, const ReformOptions& options = {});

/// Row indices per trial label.
std::map<int, std::vector<Eigen::Index>> trial_subset_indices(const SignatureSet& all);
std::map<int, SignatureSet> trial_subsets(const SignatureSet& all);

enum class ChemicalProperty { tbars, totox };

ChemicalProperty parse_property(const std::string& name);
const char* to_string(ChemicalProperty p);

struct ChemicalEntry {
    int reheat_class = 1;
    double tbars_pct = 0.0;
    bool tbars_significant = false;
    double totox_pct = 0.0;
    bool totox_significant = false;
};

struct ChemicalRecord {
    int trial = 0;
    std::vector<ChemicalEntry> entries;
};

/// Header `trial,class,tbars_pct,tbars_sig,totox_pct,totox_sig`. Records come back
/// ordered by trial.
std::vector<ChemicalRecord> load_chemical(std::istream& in);
std::vector<ChemicalRecord> load_chemical(const std::filesystem::path& path);

std::set<int> chemical_critical(const ChemicalRecord& record, ChemicalProperty property);

}  // namespace oilspec
