#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace oilspec {

/// N x B matrix of per-pixel spectral signatures with per-row trial and class labels.
struct SignatureSet {
    Eigen::MatrixXd values;
    std::vector<int> trial;
    std::vector<int> reheat_class;

    SignatureSet() = default;
    SignatureSet(Eigen::MatrixXd v, std::vector<int> trials, std::vector<int> classes);

    [[nodiscard]] Eigen::Index size() const { return values.rows(); }
    [[nodiscard]] Eigen::Index dim() const { return values.cols(); }
    [[nodiscard]] bool empty() const { return values.rows() == 0; }

    /// Rows at the given indices, in order.
    [[nodiscard]] SignatureSet select(const std::vector<Eigen::Index>& rows) const;
    /// Rows whose trial (or class) label matches.
    [[nodiscard]] SignatureSet with_trial(int trial_id) const;
    [[nodiscard]] SignatureSet with_class(int class_id) const;

    void append(const SignatureSet& other);
    /// Throws InputError on shape mismatch or non-finite values.
    void validate() const;
};

/// Header `trial,reheat_class,b0..b{B-1}`; one row per signature.
void write_signature_csv(std::ostream& out, const SignatureSet& set);
void write_signature_csv(const std::filesystem::path& path, const SignatureSet& set);
SignatureSet read_signature_csv(std::istream& in);
SignatureSet read_signature_csv(const std::filesystem::path& path);

}  // namespace oilspec
