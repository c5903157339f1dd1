#include "oilspec/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oilspec/error.hpp"

namespace oilspec {

namespace {

constexpr double kTau = 1e-12;

struct BinaryProblem {
    std::vector<double> x;
    std::vector<int> y;
};

// Dual: min 1/2 a'Qa - e'a  s.t. y'a = 0, 0 <= a <= C, Q_ij = y_i y_j K_ij.
PairMachine solve_binary(const BinaryProblem& p, double gamma, const SvmParams& params) {
    const std::size_t n = p.x.size();
    std::vector<double> kernel(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double d = p.x[i] - p.x[j];
            kernel[i * n + j] = std::exp(-gamma * d * d);
        }
    auto q = [&](std::size_t i, std::size_t j) {
        return static_cast<double>(p.y[i] * p.y[j]) * kernel[i * n + j];
    };

    const double c = params.cost;
    std::vector<double> alpha(n, 0.0);
    std::vector<double> grad(n, -1.0);
    auto at_upper = [&](std::size_t t) { return alpha[t] >= c; };
    auto at_lower = [&](std::size_t t) { return alpha[t] <= 0.0; };

    PairMachine out;
    long iter = 0;
    for (;; ++iter) {
        if (iter >= params.max_iterations) {
            out.converged = false;
            break;
        }
        // Maximal violating index i, then j by second-order gain.
        double gmax = -std::numeric_limits<double>::infinity();
        double gmax2 = -std::numeric_limits<double>::infinity();
        std::ptrdiff_t i_sel = -1, j_sel = -1;
        for (std::size_t t = 0; t < n; ++t) {
            if (p.y[t] == 1) {
                if (!at_upper(t) && -grad[t] >= gmax) { gmax = -grad[t]; i_sel = static_cast<std::ptrdiff_t>(t); }
            } else {
                if (!at_lower(t) && grad[t] >= gmax) { gmax = grad[t]; i_sel = static_cast<std::ptrdiff_t>(t); }
            }
        }
        double obj_min = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < n; ++t) {
            double grad_diff = 0.0;
            if (p.y[t] == 1) {
                if (at_lower(t)) continue;
                gmax2 = std::max(gmax2, grad[t]);
                grad_diff = gmax + grad[t];
            } else {
                if (at_upper(t)) continue;
                gmax2 = std::max(gmax2, -grad[t]);
                grad_diff = gmax - grad[t];
            }
            if (i_sel < 0 || grad_diff <= 0.0) continue;
            const auto i = static_cast<std::size_t>(i_sel);
            double quad = kernel[i * n + i] + kernel[t * n + t] -
                          2.0 * static_cast<double>(p.y[i] * p.y[t]) * kernel[i * n + t];
            if (quad <= 0.0) quad = kTau;
            const double obj = -(grad_diff * grad_diff) / quad;
            if (obj <= obj_min) { obj_min = obj; j_sel = static_cast<std::ptrdiff_t>(t); }
        }
        if (gmax + gmax2 < params.tolerance || j_sel < 0) break;

        const auto i = static_cast<std::size_t>(i_sel);
        const auto j = static_cast<std::size_t>(j_sel);
        const double old_i = alpha[i], old_j = alpha[j];
        if (p.y[i] != p.y[j]) {
            double quad = kernel[i * n + i] + kernel[j * n + j] + 2.0 * q(i, j);
            if (quad <= 0.0) quad = kTau;
            const double delta = (-grad[i] - grad[j]) / quad;
            const double diff = alpha[i] - alpha[j];
            alpha[i] += delta;
            alpha[j] += delta;
            if (diff > 0.0) {
                if (alpha[j] < 0.0) { alpha[j] = 0.0; alpha[i] = diff; }
            } else {
                if (alpha[i] < 0.0) { alpha[i] = 0.0; alpha[j] = -diff; }
            }
            if (diff > 0.0) {
                if (alpha[i] > c) { alpha[i] = c; alpha[j] = c - diff; }
            } else {
                if (alpha[j] > c) { alpha[j] = c; alpha[i] = c + diff; }
            }
        } else {
            double quad = kernel[i * n + i] + kernel[j * n + j] - 2.0 * q(i, j);
            if (quad <= 0.0) quad = kTau;
            const double delta = (grad[i] - grad[j]) / quad;
            const double sum = alpha[i] + alpha[j];
            alpha[i] -= delta;
            alpha[j] += delta;
            if (sum > c) {
                if (alpha[i] > c) { alpha[i] = c; alpha[j] = sum - c; }
            } else {
                if (alpha[j] < 0.0) { alpha[j] = 0.0; alpha[i] = sum; }
            }
            if (sum > c) {
                if (alpha[j] > c) { alpha[j] = c; alpha[i] = sum - c; }
            } else {
                if (alpha[i] < 0.0) { alpha[i] = 0.0; alpha[j] = sum; }
            }
        }
        const double di = alpha[i] - old_i, dj = alpha[j] - old_j;
        for (std::size_t t = 0; t < n; ++t) grad[t] += q(i, t) * di + q(j, t) * dj;
    }

    // Bias: average over free vectors, else midpoint of the feasible interval.
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    double free_sum = 0.0;
    int free_count = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const double yg = p.y[t] * grad[t];
        if (at_upper(t)) {
            if (p.y[t] == -1) ub = std::min(ub, yg); else lb = std::max(lb, yg);
        } else if (at_lower(t)) {
            if (p.y[t] == 1) ub = std::min(ub, yg); else lb = std::max(lb, yg);
        } else {
            ++free_count;
            free_sum += yg;
        }
    }
    const double rho = free_count > 0 ? free_sum / free_count : 0.5 * (ub + lb);
    out.bias = -rho;
    out.iterations = iter;
    for (std::size_t t = 0; t < n; ++t) {
        if (alpha[t] > 0.0) {
            out.support.push_back(p.x[t]);
            out.alpha.push_back(alpha[t]);
            out.sign.push_back(p.y[t]);
        }
    }
    return out;
}

}  // namespace

double SvmModel::decision(const PairMachine& m, double x) const {
    const double z = standardize(x);
    double f = m.bias;
    for (std::size_t i = 0; i < m.support.size(); ++i) {
        const double d = m.support[i] - z;
        f += m.alpha[i] * m.sign[i] * std::exp(-gamma * d * d);
    }
    return f;
}

std::vector<int> SvmModel::votes(double x) const {
    std::vector<int> v(static_cast<std::size_t>(class_count), 0);
    for (const auto& m : machines) {
        const double f = decision(m, x);
        ++v[static_cast<std::size_t>(f >= 0.0 ? m.positive_class : m.negative_class)];
    }
    return v;
}

int SvmModel::predict(double x) const {
    if (!std::isfinite(x)) throw InputError("cannot classify a non-finite feature");
    const auto v = votes(x);
    // max_element returns the first maximum: ties go to the smaller index.
    return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

int svm_predict(const SvmModel& model, double x) { return model.predict(x); }

SvmModel svm_train(std::span<const LabelledFeature> data, const SvmParams& params) {
    if (!(params.gamma > 0.0) || !(params.cost > 0.0))
        throw InputError("SVM gamma and cost must be positive");
    if (data.empty()) throw InputError("SVM training set is empty");
    int max_label = 0;
    for (const auto& f : data) {
        if (!std::isfinite(f.x)) throw InputError("SVM training feature is not finite");
        if (f.label < 0) throw InputError("SVM labels must be non-negative");
        max_label = std::max(max_label, f.label);
    }
    const int classes = max_label + 1;
    if (classes < 2) throw InputError("SVM training needs at least 2 classes");
    std::vector<int> counts(static_cast<std::size_t>(classes), 0);
    for (const auto& f : data) ++counts[static_cast<std::size_t>(f.label)];
    for (int c = 0; c < classes; ++c)
        if (counts[static_cast<std::size_t>(c)] == 0)
            throw InputError("SVM class " + std::to_string(c) + " has no training samples");

    SvmModel model;
    model.gamma = params.gamma;
    model.cost = params.cost;
    model.class_count = classes;
    model.tolerance = params.tolerance;
    model.seed = params.seed;
    if (params.standardize) {
        double mean = 0.0;
        for (const auto& f : data) mean += f.x;
        mean /= static_cast<double>(data.size());
        double var = 0.0;
        for (const auto& f : data) var += (f.x - mean) * (f.x - mean);
        var /= static_cast<double>(data.size());
        model.feature_mean = mean;
        model.feature_scale = var > 0.0 ? std::sqrt(var) : 1.0;
    }

    for (int a = 0; a < classes; ++a) {
        for (int b = a + 1; b < classes; ++b) {
            BinaryProblem prob;
            for (const auto& f : data) {
                if (f.label != a && f.label != b) continue;
                prob.x.push_back(model.standardize(f.x));
                prob.y.push_back(f.label == a ? 1 : -1);
            }
            PairMachine m = solve_binary(prob, params.gamma, params);
            m.positive_class = a;
            m.negative_class = b;
            model.machines.push_back(std::move(m));
        }
    }
    return model;
}

}  // namespace oilspec
