#include "oilspec/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oilspec/error.hpp"

namespace oilspec {

namespace {

// Typical 10-bit transmittance levels across the nine LED bands.
const double kBaseSpectrum[9] = {310, 340, 420, 560, 600, 650, 700, 690, 640};
// Heating darkens the oil, most strongly in the visible bands.
const double kDriftShape[9] = {-0.20, -0.25, -0.35, -0.45, -0.40, -0.35, -0.30, -0.30, -0.30};

}  // namespace

Eigen::VectorXd SynthConfig::resolved_base() const {
    if (base_spectrum.size() > 0) return base_spectrum;
    Eigen::VectorXd b(bands);
    for (int i = 0; i < bands; ++i) b[i] = kBaseSpectrum[i % 9];
    return b;
}

Eigen::VectorXd SynthConfig::resolved_direction() const {
    Eigen::VectorXd d;
    if (drift_direction.size() > 0) {
        d = drift_direction;
    } else {
        d.resize(bands);
        for (int i = 0; i < bands; ++i) d[i] = kDriftShape[i % 9];
    }
    return d.normalized();
}

Eigen::MatrixXd SynthConfig::resolved_covariance() const {
    if (within_covariance.size() > 0) return within_covariance;
    return Eigen::MatrixXd::Identity(bands, bands) * (within_sd * within_sd);
}

void SynthConfig::validate() const {
    if (trials < 1 || classes < 2 || per_class_per_trial < 1 || bands < 1)
        throw InputError("synthetic counts must be positive (and at least 2 classes)");
    if (base_spectrum.size() > 0 && base_spectrum.size() != bands)
        throw InputError("base spectrum length must equal the band count");
    if (drift_direction.size() > 0 &&
        (drift_direction.size() != bands || !(drift_direction.norm() > 0.0)))
        throw InputError("drift direction must be a non-zero vector with one entry per band");
    if (within_covariance.size() > 0 &&
        (within_covariance.rows() != bands || within_covariance.cols() != bands))
        throw InputError("within-class covariance must be bands x bands");
    if (step < 0.0 || inflation < 0.0 || trial_jitter < 0.0 || trial_offset_sd < 0.0 || boost < 0.0 ||
        within_sd < 0.0)
        throw InputError("synthetic scale parameters must be non-negative");
    for (int c : critical)
        if (c < 1 || c >= classes)
            throw InputError("critical class " + std::to_string(c) + " outside 1..C-1");
    const Eigen::MatrixXd cov = resolved_covariance();
    if (!cov.isApprox(cov.transpose(), 1e-12))
        throw InputError("within-class covariance must be symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success)
        throw InputError("within-class covariance is not positive definite");
}

SignatureSet generate_trial(const SynthConfig& config, int trial) {
    config.validate();
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(trial)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);

    const int b = config.bands;
    const Eigen::VectorXd direction = config.resolved_direction();
    const Eigen::MatrixXd chol = Eigen::LLT<Eigen::MatrixXd>(config.resolved_covariance()).matrixL();

    Eigen::VectorXd mean = config.resolved_base();
    for (int i = 0; i < b; ++i) mean[i] += config.trial_offset_sd * normal(rng);

    const int n = config.per_class_per_trial;
    Eigen::MatrixXd values(static_cast<Eigen::Index>(n) * config.classes, b);
    std::vector<int> classes;
    classes.reserve(static_cast<std::size_t>(values.rows()));
    Eigen::VectorXd z(b);
    for (int c = 0; c < config.classes; ++c) {
        if (c > 0) {
            const double boost = config.critical.count(c) ? config.boost : 1.0;
            const double jitter = 1.0 + config.trial_jitter * normal(rng);
            mean += config.step * boost * jitter * direction;
        }
        const double spread = std::sqrt(1.0 + config.inflation * c);
        for (int s = 0; s < n; ++s) {
            for (int i = 0; i < b; ++i) z[i] = normal(rng);
            values.row(static_cast<Eigen::Index>(c) * n + s) = (mean + spread * (chol * z)).transpose();
            classes.push_back(c);
        }
    }
    std::vector<int> trials(classes.size(), trial);
    return SignatureSet(std::move(values), std::move(trials), std::move(classes));
}

SyntheticDataset generate(const SynthConfig& config) {
    config.validate();
    SyntheticDataset out;
    for (int t = 0; t < config.trials; ++t) {
        out.signatures.append(generate_trial(config, t));
        out.critical_truth[t] = config.critical;
    }
    return out;
}

std::vector<const LabelledSet*> LabelledSetPartition::train() const {
    std::vector<const LabelledSet*> out;
    for (const auto& s : sets)
        if (!s.test) out.push_back(&s);
    return out;
}

std::vector<const LabelledSet*> LabelledSetPartition::test() const {
    std::vector<const LabelledSet*> out;
    for (const auto& s : sets)
        if (s.test) out.push_back(&s);
    return out;
}

LabelledSetPartition reform_labelled_sets(const SignatureSet& all, const ReformOptions& options) {
    if (options.sets_per_class < 1 || options.set_size < 1)
        throw InputError("set count and size must be positive");
    if (!(options.test_fraction >= 0.0 && options.test_fraction < 1.0))
        throw InputError("test fraction must lie in [0, 1)");

    // class -> trial -> rows
    std::map<int, std::map<int, std::vector<Eigen::Index>>> groups;
    for (Eigen::Index i = 0; i < all.size(); ++i) groups[all.reheat_class[i]][all.trial[i]].push_back(i);

    LabelledSetPartition out;
    int next_id = 0;
    const auto needed = static_cast<std::size_t>(options.sets_per_class) * options.set_size;
    const auto n_test = static_cast<int>(std::lround(options.test_fraction * options.sets_per_class));
    for (auto& [label, trials] : groups) {
        std::seed_seq seq{options.seed, static_cast<std::uint64_t>(label)};
        std::mt19937_64 rng(seq);
        std::vector<Eigen::Index> pool;
        for (auto& [trial, rows] : trials) {
            std::shuffle(rows.begin(), rows.end(), rng);
            pool.insert(pool.end(), rows.begin(), rows.end());
        }
        if (pool.size() < needed)
            throw InputError("class " + std::to_string(label) + " has " + std::to_string(pool.size()) +
                             " signatures; " + std::to_string(needed) + " are needed");

        std::vector<int> order(static_cast<std::size_t>(options.sets_per_class));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<bool> is_test(order.size(), false);
        for (int k = 0; k < n_test; ++k) is_test[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = true;

        for (int s = 0; s < options.sets_per_class; ++s) {
            LabelledSet set;
            set.set_id = next_id++;
            set.reheat_class = label;
            const auto begin = pool.begin() + static_cast<std::ptrdiff_t>(s) * options.set_size;
            set.members.assign(begin, begin + options.set_size);
            set.test = is_test[static_cast<std::size_t>(s)];
            out.sets.push_back(std::move(set));
        }
    }
    return out;
}

std::map<int, std::vector<Eigen::Index>> trial_subset_indices(const SignatureSet& all) {
    if (all.trial.size() != static_cast<std::size_t>(all.size()))
        throw InputError("signatures are missing trial labels");
    std::map<int, std::vector<Eigen::Index>> out;
    for (Eigen::Index i = 0; i < all.size(); ++i) out[all.trial[i]].push_back(i);
    return out;
}

std::map<int, SignatureSet> trial_subsets(const SignatureSet& all) {
    std::map<int, SignatureSet> out;
    for (const auto& [trial, rows] : trial_subset_indices(all)) out.emplace(trial, all.select(rows));
    return out;
}

ChemicalProperty parse_property(const std::string& name) {
    std::string low;
    for (char c : name) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (low == "tbars") return ChemicalProperty::tbars;
    if (low == "totox") return ChemicalProperty::totox;
    throw InputError("unknown chemical property '" + name + "' (expected TBARS or TOTOX)");
}

const char* to_string(ChemicalProperty p) { return p == ChemicalProperty::tbars ? "TBARS" : "TOTOX"; }

namespace {

bool parse_flag(const std::string& s, std::size_t line) {
    if (s == "1" || s == "true" || s == "TRUE" || s == "yes") return true;
    if (s == "0" || s == "false" || s == "FALSE" || s == "no") return false;
    throw InputError("chemical CSV line " + std::to_string(line) + ": bad significance flag '" + s + "'");
}

}  // namespace

std::vector<ChemicalRecord> load_chemical(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InputError("chemical CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "trial,class,tbars_pct,tbars_sig,totox_pct,totox_sig")
        throw InputError("chemical CSV header must be trial,class,tbars_pct,tbars_sig,totox_pct,totox_sig");

    std::map<int, ChemicalRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) f.push_back(field);
        if (f.size() != 6)
            throw InputError("chemical CSV line " + std::to_string(line_no) + ": expected 6 fields");
        ChemicalEntry e;
        int trial = 0;
        try {
            trial = std::stoi(f[0]);
            e.reheat_class = std::stoi(f[1]);
            e.tbars_pct = std::stod(f[2]);
            e.totox_pct = std::stod(f[4]);
        } catch (const std::logic_error&) {
            throw InputError("chemical CSV line " + std::to_string(line_no) + ": bad number");
        }
        e.tbars_significant = parse_flag(f[3], line_no);
        e.totox_significant = parse_flag(f[5], line_no);
        if (e.reheat_class < 1)
            throw InputError("chemical CSV line " + std::to_string(line_no) + ": class must be >= 1");
        if (e.tbars_pct < 0.0 || e.totox_pct < 0.0)
            throw InputError("chemical CSV line " + std::to_string(line_no) + ": percentages must be >= 0");
        auto& rec = records[trial];
        rec.trial = trial;
        rec.entries.push_back(e);
    }
    std::vector<ChemicalRecord> out;
    for (auto& [t, r] : records) {
        std::sort(r.entries.begin(), r.entries.end(),
                  [](const auto& a, const auto& b) { return a.reheat_class < b.reheat_class; });
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ChemicalRecord> load_chemical(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open chemical CSV " + path.string());
    return load_chemical(in);
}

std::set<int> chemical_critical(const ChemicalRecord& record, ChemicalProperty property) {
    std::set<int> out;
    for (const auto& e : record.entries) {
        const bool sig = property == ChemicalProperty::tbars ? e.tbars_significant : e.totox_significant;
        if (sig) out.insert(e.reheat_class);
    }
    return out;
}

}  // namespace oilspec
