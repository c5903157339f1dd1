#include <random>

#include <benchmark/benchmark.h>

#include "oilspec/classifier.hpp"
#include "oilspec/features.hpp"
#include "oilspec/linalg.hpp"
#include "oilspec/sclust.hpp"
#include "oilspec/svm.hpp"
#include "oilspec/synth.hpp"

using namespace oilspec;

namespace {

SignatureSet one_trial(int per_class) {
    SynthConfig cfg;
    cfg.trials = 1;
    cfg.per_class_per_trial = per_class;
    return generate(cfg).signatures;
}

std::vector<LabelledFeature> drift_features(int per_class) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0, 1);
    std::vector<LabelledFeature> out;
    for (int c = 0; c < 6; ++c)
        for (int i = 0; i < per_class; ++i) out.push_back({1.5 * c + n(rng), c});
    return out;
}

}  // namespace

static void BM_FitGaussian(benchmark::State& state) {
    const auto set = one_trial(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fit_gaussian(set.with_class(3)));
}
BENCHMARK(BM_FitGaussian)->Arg(135)->Arg(900);

static void BM_Bhattacharyya(benchmark::State& state) {
    const auto set = one_trial(900);
    const auto ref = fit_gaussian(set.with_class(0));
    const auto target = fit_gaussian(set.with_class(4));
    for (auto _ : state) benchmark::DoNotOptimize(bhattacharyya(target, ref));
}
BENCHMARK(BM_Bhattacharyya);

static void BM_Eigen(benchmark::State& state) {
    const auto set = one_trial(static_cast<int>(state.range(0)) / 6);
    const auto g = build_graph(set.values, 5.0);
    const auto method = state.range(1) == 0 ? linalg::EigenMethod::jacobi : linalg::EigenMethod::tridiagonal_qr;
    for (auto _ : state) benchmark::DoNotOptimize(linalg::symmetric_eigen(g.laplacian, method, false));
}
BENCHMARK(BM_Eigen)->Args({96, 0})->Args({96, 1})->Args({384, 0})->Args({384, 1})->Unit(benchmark::kMillisecond);

static void BM_SigmaSweep(benchmark::State& state) {
    const auto set = one_trial(static_cast<int>(state.range(0)));
    const auto grid = default_sigma_grid();
    for (auto _ : state) benchmark::DoNotOptimize(sigma_sweep(set.values, grid));
}
BENCHMARK(BM_SigmaSweep)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_SvmTrain(benchmark::State& state) {
    const auto data = drift_features(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(svm_train(data, {.gamma = 1.2, .cost = 100}));
}
BENCHMARK(BM_SvmTrain)->Arg(48)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_GridSweep(benchmark::State& state) {
    const auto data = drift_features(48);
    for (auto _ : state)
        benchmark::DoNotOptimize(grid_sweep(data, default_gamma_grid(), default_cost_grid(), 5, 0));
}
BENCHMARK(BM_GridSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
