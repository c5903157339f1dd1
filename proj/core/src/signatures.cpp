#include "oilspec/signatures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "oilspec/error.hpp"

namespace oilspec {

SignatureSet::SignatureSet(Eigen::MatrixXd v, std::vector<int> trials, std::vector<int> classes)
    : values(std::move(v)), trial(std::move(trials)), reheat_class(std::move(classes)) {
    validate();
}

SignatureSet SignatureSet::select(const std::vector<Eigen::Index>& rows) const {
    SignatureSet out;
    out.values.resize(static_cast<Eigen::Index>(rows.size()), dim());
    out.trial.reserve(rows.size());
    out.reheat_class.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Eigen::Index r = rows[i];
        if (r < 0 || r >= size()) throw InputError("signature row index out of range");
        out.values.row(static_cast<Eigen::Index>(i)) = values.row(r);
        out.trial.push_back(trial[r]);
        out.reheat_class.push_back(reheat_class[r]);
    }
    return out;
}

SignatureSet SignatureSet::with_trial(int trial_id) const {
    std::vector<Eigen::Index> rows;
    for (Eigen::Index i = 0; i < size(); ++i)
        if (trial[i] == trial_id) rows.push_back(i);
    return select(rows);
}

SignatureSet SignatureSet::with_class(int class_id) const {
    std::vector<Eigen::Index> rows;
    for (Eigen::Index i = 0; i < size(); ++i)
        if (reheat_class[i] == class_id) rows.push_back(i);
    return select(rows);
}

void SignatureSet::append(const SignatureSet& other) {
    if (other.empty()) return;
    if (empty()) {
        *this = other;
        return;
    }
    if (other.dim() != dim()) throw InputError("cannot append signatures of different band count");
    Eigen::MatrixXd merged(size() + other.size(), dim());
    merged << values, other.values;
    values = std::move(merged);
    trial.insert(trial.end(), other.trial.begin(), other.trial.end());
    reheat_class.insert(reheat_class.end(), other.reheat_class.begin(), other.reheat_class.end());
}

void SignatureSet::validate() const {
    if (static_cast<std::size_t>(values.rows()) != trial.size() ||
        static_cast<std::size_t>(values.rows()) != reheat_class.size())
        throw InputError("signature labels do not match signature count");
    if (!values.allFinite()) throw InputError("signatures contain non-finite values");
}

void write_signature_csv(std::ostream& out, const SignatureSet& set) {
    out << "trial,reheat_class";
    for (Eigen::Index b = 0; b < set.dim(); ++b) out << ",b" << b;
    out << '\n';
    char buf[32];
    for (Eigen::Index i = 0; i < set.size(); ++i) {
        out << set.trial[i] << ',' << set.reheat_class[i];
        for (Eigen::Index b = 0; b < set.dim(); ++b) {
            std::snprintf(buf, sizeof buf, "%.10g", set.values(i, b));
            out << ',' << buf;
        }
        out << '\n';
    }
}

void write_signature_csv(const std::filesystem::path& path, const SignatureSet& set) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path.string() + " for writing");
    write_signature_csv(out, set);
    if (!out) throw InputError("failed writing " + path.string());
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        fields.push_back(field);
    }
    return fields;
}

}  // namespace

SignatureSet read_signature_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InputError("signature CSV is empty");
    const auto header = split_fields(line);
    if (header.size() < 3 || header[0] != "trial" || header[1] != "reheat_class")
        throw InputError("signature CSV header must start with trial,reheat_class");
    const std::size_t bands = header.size() - 2;
    for (std::size_t b = 0; b < bands; ++b)
        if (header[b + 2] != "b" + std::to_string(b))
            throw InputError("unexpected band column '" + header[b + 2] + "'");

    std::vector<double> flat;
    std::vector<int> trials;
    std::vector<int> classes;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line);
        if (fields.size() != bands + 2)
            throw InputError("signature CSV line " + std::to_string(line_no) + ": expected " +
                             std::to_string(bands + 2) + " fields");
        try {
            std::size_t pos = 0;
            trials.push_back(std::stoi(fields[0], &pos));
            classes.push_back(std::stoi(fields[1], &pos));
            for (std::size_t b = 0; b < bands; ++b) flat.push_back(std::stod(fields[b + 2]));
        } catch (const std::logic_error&) {
            throw InputError("signature CSV line " + std::to_string(line_no) + ": bad number");
        }
    }
    const auto n = static_cast<Eigen::Index>(trials.size());
    Eigen::MatrixXd values =
        Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
            flat.data(), n, static_cast<Eigen::Index>(bands));
    return SignatureSet(std::move(values), std::move(trials), std::move(classes));
}

SignatureSet read_signature_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open signature CSV " + path.string());
    return read_signature_csv(in);
}

}  // namespace oilspec
