#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oilspec/classifier.hpp"
#include "oilspec/cube.hpp"
#include "oilspec/error.hpp"
#include "oilspec/pipeline.hpp"
#include "oilspec/serialize.hpp"
#include "oilspec/synth.hpp"
#include "run_io.hpp"

using namespace oilspec;
using namespace oilspec::cli;

namespace {

constexpr int kExitCompute = 1;
constexpr int kExitInput = 2;

struct Common {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out = "out";
};

json load_config(const Common& c) {
    if (c.config_path.empty()) return json::object();
    json j = read_json(c.config_path);
    if (!j.is_object()) throw InputError("config file must hold a JSON object");
    return j;
}

json section(const json& config, const char* name) {
    return config.contains(name) ? config.at(name) : json::object();
}

std::uint64_t resolve_seed(const Common& c, const json& config) {
    if (c.seed) return *c.seed;
    return config.value("seed", std::uint64_t{0});
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("config field '") + key + "': " + e.what());
    }
}

std::vector<double> parse_sigma_grid(const std::string& text) {
    // "lo:hi:points" (log-spaced) or "s1,s2,..."
    std::vector<double> out;
    try {
        if (text.find(':') != std::string::npos) {
            std::istringstream in(text);
            std::string lo, hi, n;
            std::getline(in, lo, ':');
            std::getline(in, hi, ':');
            std::getline(in, n);
            return default_sigma_grid(std::stoi(n), std::stod(lo), std::stod(hi));
        }
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
    } catch (const std::logic_error&) {
        throw InputError("bad --sigma-grid '" + text + "' (expected lo:hi:points or a comma list)");
    }
    return out;
}

ModeRange parse_mode_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument("no colon");
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw InputError("bad --mode-range '" + text + "' (expected first:last, e.g. 3:6)");
    }
}

SignatureSet load_signatures(const std::string& path, Manifest& m) {
    require_file(path, "signature CSV");
    m.input(path);
    return read_signature_csv(fs::path(path));
}

// simulate -------------------------------------------------------------------

int cmd_simulate(const Common& common) {
    const json config = load_config(common);
    SynthConfig cfg = section(config, "synth").get<SynthConfig>();
    cfg.seed = resolve_seed(common, config);
    cfg.validate();

    Manifest m("simulate", common.out);
    if (!common.config_path.empty()) m.input(common.config_path);
    m.set_seed(cfg.seed);
    m.set_config({{"synth", json(cfg)}});

    const auto data = generate(cfg);
    write_signature_csv(m.output("signatures.csv"), data.signatures);
    json truth = json::object();
    for (const auto& [trial, crit] : data.critical_truth) truth[std::to_string(trial)] = crit;
    write_json(m.output("ground_truth.json"),
               {{"schema_version", kSchemaVersion}, {"critical", truth}, {"config", json(cfg)}});
    m.write();
    std::printf("wrote %ld signatures (%d trials x %d classes) to %s\n", static_cast<long>(data.signatures.size()),
                cfg.trials, cfg.classes, m.dir().c_str());
    return 0;
}

// preprocess -----------------------------------------------------------------

struct PreprocessArgs {
    std::string cube, dark;
    int row = -1, col = -1, side = 30;
    int filter_half_width = 1;
    std::string filter = "mean";
    int trial = 0, reheat_class = 0;
};

int cmd_preprocess(const Common& common, const PreprocessArgs& a) {
    require_file(a.cube, "cube input");
    if (a.dark.empty() || !fs::is_regular_file(a.dark))
        throw InputError("dark-current subtraction stage: dark frame '" + a.dark + "' not found");
    if (a.filter != "mean" && a.filter != "median") throw InputError("--filter must be mean or median");

    Manifest m("preprocess", common.out);
    m.input(a.cube);
    m.input(a.dark);
    const SpectralCube raw = read_cube(a.cube);
    const DarkFrame dark = read_dark(a.dark);
    const SpectralCube clean = subtract_dark(raw, dark);
    const SpectralCube filtered =
        window_filter(clean, a.filter_half_width, a.filter == "median" ? FilterMode::median : FilterMode::mean);
    WindowSpec window = WindowSpec::centered(raw.height(), raw.width(), a.side);
    if (a.row >= 0) window.row = a.row;
    if (a.col >= 0) window.col = a.col;
    const SignatureSet set = crop_signatures(filtered, window, a.trial, a.reheat_class);

    m.set_config({{"window", {{"row", window.row}, {"col", window.col}, {"side", window.side}}},
                  {"filter", a.filter},
                  {"filter_half_width", a.filter_half_width},
                  {"trial", a.trial},
                  {"reheat_class", a.reheat_class}});
    write_signature_csv(m.output("signatures.csv"), set);
    m.write();
    std::printf("wrote %ld signatures to %s\n", static_cast<long>(set.size()), m.dir().c_str());
    return 0;
}

// train ----------------------------------------------------------------------

struct TrainArgs {
    std::string signatures;
    std::optional<int> fda_dim;
};

PipelineConfig pipeline_config(const json& config, std::uint64_t seed, const TrainArgs& a) {
    const json p = section(config, "pipeline");
    PipelineConfig pc;
    pc.reform.sets_per_class = get_or(p, "sets_per_class", pc.reform.sets_per_class);
    pc.reform.set_size = get_or(p, "set_size", pc.reform.set_size);
    pc.reform.test_fraction = get_or(p, "test_fraction", pc.reform.test_fraction);
    pc.fda_dim = a.fda_dim.value_or(get_or(p, "fda_dim", pc.fda_dim));
    pc.gamma_grid = get_or(p, "gamma_grid", pc.gamma_grid);
    pc.cost_grid = get_or(p, "cost_grid", pc.cost_grid);
    pc.folds = get_or(p, "folds", pc.folds);
    pc.svm.tolerance = get_or(p, "svm_tolerance", pc.svm.tolerance);
    pc.seed = seed;
    pc.reform.seed = seed;
    return pc;
}

json pipeline_config_json(const PipelineConfig& pc) {
    return {{"sets_per_class", pc.reform.sets_per_class}, {"set_size", pc.reform.set_size},
            {"test_fraction", pc.reform.test_fraction},   {"fda_dim", pc.fda_dim},
            {"gamma_grid", pc.gamma_grid},                {"cost_grid", pc.cost_grid},
            {"folds", pc.folds},                          {"svm_tolerance", pc.svm.tolerance}};
}

int cmd_train(const Common& common, const TrainArgs& a) {
    const json config = load_config(common);
    const std::uint64_t seed = resolve_seed(common, config);
    const PipelineConfig pc = pipeline_config(config, seed, a);

    Manifest m("train", common.out);
    if (!common.config_path.empty()) m.input(common.config_path);
    m.set_seed(seed);
    m.set_config({{"pipeline", pipeline_config_json(pc)}});
    const SignatureSet all = load_signatures(a.signatures, m);
    const PipelineReport report = run_training_pipeline(all, pc);

    json model = report.trained;
    model["svm"]["folds"] = pc.folds;
    write_json(m.output("model.json"), model);
    write_json(m.output("metrics.json"),
               {{"schema_version", kSchemaVersion},
                {"train", metrics_json(report.train)},
                {"test", metrics_json(report.test)},
                {"baselines",
                 {{"nearest_neighbor", metrics_json(summarize(report.nearest_neighbor))},
                  {"nearest_centroid", metrics_json(summarize(report.nearest_centroid))}}},
                {"grid", to_json(report.grid)}});
    {
        std::ofstream out(m.output("confusion_test.csv"));
        write_confusion_csv(out, report.test.confusion);
    }
    {
        std::ofstream out(m.output("grid.csv"));
        out << "cost,gamma,cv_accuracy\n";
        for (std::size_t ci = 0; ci < report.grid.cost_grid.size(); ++ci)
            for (std::size_t gi = 0; gi < report.grid.gamma_grid.size(); ++gi)
                out << report.grid.cost_grid[ci] << ',' << report.grid.gamma_grid[gi] << ','
                    << report.grid.accuracy(static_cast<Eigen::Index>(ci), static_cast<Eigen::Index>(gi)) << '\n';
    }
    {
        std::ofstream out(m.output("features.csv"));
        out << "set_id,trial,reheat_class,split,d_b1,d_b2,d_b\n";
        char buf[160];
        for (const auto& f : report.features) {
            std::snprintf(buf, sizeof buf, "%d,%d,%d,%s,%.10g,%.10g,%.10g\n", f.feature.set_id, f.feature.trial_id,
                          f.feature.label, f.test ? "test" : "train", f.detail.d_b1, f.detail.d_b2, f.detail.d_b);
            out << buf;
        }
    }
    m.write();
    std::printf("test accuracy %.4f (pure vs heated %.4f), best gamma=%g cost=%g\n", report.test.fraction_correct,
                report.test.pure_vs_heated_accuracy.value_or(0.0), report.grid.best_gamma, report.grid.best_cost);
    return 0;
}

// predict --------------------------------------------------------------------

int cmd_predict(const Common& common, const std::string& model_path, const std::string& signatures,
                int set_size) {
    Manifest m("predict", common.out);
    m.input(model_path);
    const TrainedPipeline trained = read_json(model_path).get<TrainedPipeline>();
    const SignatureSet all = load_signatures(signatures, m);
    m.set_config({{"set_size", set_size}});
    const auto preds = predict_sets(trained, all, set_size);

    std::ofstream out(m.output("predictions.csv"));
    out << "set,trial,reheat_class,size,d_b,predicted_class\n";
    char buf[160];
    for (const auto& p : preds) {
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%ld,%.10g,%d\n", p.set_index, p.trial, p.reheat_class,
                      static_cast<long>(p.size), p.d_b, p.predicted);
        out << buf;
    }
    out.close();
    m.write();
    std::printf("predicted %zu sets\n", preds.size());
    return 0;
}

// cluster --------------------------------------------------------------------

struct ClusterArgs {
    std::string signatures;
    std::string algorithm;
    std::string sigma_grid;
    std::string mode_range;
    std::optional<int> subsample;
    bool amalgamate = false;
};

int cmd_cluster(const Common& common, const ClusterArgs& a) {
    const json config = load_config(common);
    const json c = section(config, "cluster");
    ClusterConfig cc;
    cc.seed = resolve_seed(common, config);
    cc.algorithm = parse_algorithm(a.algorithm.empty() ? get_or<std::string>(c, "algorithm", "LBW") : a.algorithm);
    if (!a.sigma_grid.empty())
        cc.sigmas = parse_sigma_grid(a.sigma_grid);
    else if (c.contains("sigma_grid"))
        cc.sigmas = get_or(c, "sigma_grid", cc.sigmas);
    if (!a.mode_range.empty()) {
        cc.modes = parse_mode_range(a.mode_range);
    } else if (c.contains("mode_range")) {
        const auto r = get_or(c, "mode_range", std::vector<int>{});
        if (r.size() != 2) throw InputError("config cluster.mode_range must be [first, last]");
        cc.modes = {r[0], r[1]};
    }
    cc.subsample = a.subsample.value_or(get_or(c, "subsample", cc.subsample));
    cc.restarts = get_or(c, "restarts", cc.restarts);
    const bool amalgamate = a.amalgamate || get_or(c, "amalgamate", false);

    Manifest m("cluster", common.out);
    if (!common.config_path.empty()) m.input(common.config_path);
    m.set_seed(cc.seed);
    m.set_config({{"cluster",
                   {{"algorithm", to_string(cc.algorithm)},
                    {"sigma_grid", cc.sigmas},
                    {"mode_range", {cc.modes.first, cc.modes.last}},
                    {"subsample", cc.subsample},
                    {"restarts", cc.restarts},
                    {"amalgamate", amalgamate}}}});
    const SignatureSet all = load_signatures(a.signatures, m);
    const auto runs = cluster_by_trial(all, cc, amalgamate);

    std::ofstream summary(m.output("critical.csv"));
    summary << "trial,algorithm,prominent_mode,dominant_sigma,critical\n";
    for (const auto& run : runs) {
        const std::string tag = run.trial < 0 ? "all" : "trial" + std::to_string(run.trial);
        std::ofstream sweep(m.output("sweep_" + tag + ".csv"));
        sweep << "sigma";
        for (int k = cc.modes.first; k <= cc.modes.last; ++k) sweep << ",g" << k;
        sweep << '\n';
        char buf[64];
        for (std::size_t i = 0; i < run.sweep.sigmas.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.10g", run.sweep.sigmas[i]);
            sweep << buf;
            for (int k = cc.modes.first; k <= cc.modes.last; ++k) {
                std::snprintf(buf, sizeof buf, ",%.10g", run.sweep.gap(i, k));
                sweep << buf;
            }
            sweep << '\n';
        }
        json report = cluster_report_json(run);
        report["rows"] = run.rows;
        write_json(m.output("cluster_" + tag + ".json"), report);
        summary << (run.trial < 0 ? std::string("all") : std::to_string(run.trial)) << ','
                << to_string(cc.algorithm) << ',' << run.selection.mode << ',' << run.selection.sigma << ','
                << join_set(run.report.critical) << '\n';
        std::printf("%s: k*=%d sigma*=%.3g critical {%s}\n", tag.c_str(), run.selection.mode, run.selection.sigma,
                    join_set(run.report.critical, ',').c_str());
    }
    summary.close();
    m.write();
    return 0;
}

// eval -----------------------------------------------------------------------

struct CriticalRow {
    std::string trial;
    std::string algorithm;
    std::set<int> critical;
};

std::vector<CriticalRow> read_critical_csv(const fs::path& path) {
    require_file(path, "cluster critical-class table");
    std::ifstream in(path);
    std::string line;
    if (!std::getline(in, line) || line != "trial,algorithm,prominent_mode,dominant_sigma,critical")
        throw InputError("'" + path.string() + "' is not a critical.csv written by `cluster`");
    std::vector<CriticalRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) f.push_back(tok);
        if (f.size() == 4) f.emplace_back();
        if (f.size() != 5) throw InputError("malformed row in '" + path.string() + "': " + line);
        rows.push_back({f[0], f[1], parse_set(f[4])});
    }
    return rows;
}

int cmd_eval(const Common& common, const std::string& clusters, const std::string& chemical) {
    Manifest m("eval", common.out);
    fs::path table = clusters;
    if (fs::is_directory(table)) table /= "critical.csv";
    m.input(table);
    require_file(chemical, "chemical CSV");
    m.input(chemical);
    const auto rows = read_critical_csv(table);
    std::map<int, ChemicalRecord> records;
    for (auto& r : load_chemical(fs::path(chemical))) records[r.trial] = r;

    std::ofstream out(m.output("agreement.csv"));
    out << "trial,algorithm,spectral_critical,property,chemical_critical,agreement\n";
    json entries = json::array();
    int matched = 0;
    for (const auto& row : rows) {
        if (row.trial == "all") continue;
        const int trial = std::stoi(row.trial);
        const auto it = records.find(trial);
        if (it == records.end()) continue;
        for (auto prop : {ChemicalProperty::tbars, ChemicalProperty::totox}) {
            const auto chem = chemical_critical(it->second, prop);
            const double score = agreement(row.critical, chem);
            out << trial << ',' << row.algorithm << ',' << join_set(row.critical) << ',' << to_string(prop) << ','
                << join_set(chem) << ',' << score << '\n';
            entries.push_back({{"trial", trial},
                               {"algorithm", row.algorithm},
                               {"spectral_critical", row.critical},
                               {"property", to_string(prop)},
                               {"chemical_critical", chem},
                               {"agreement", score}});
            std::printf("trial %d %s vs %s: {%s} vs {%s} -> %.3f\n", trial, row.algorithm.c_str(), to_string(prop),
                        join_set(row.critical, ',').c_str(), join_set(chem, ',').c_str(), score);
        }
        ++matched;
    }
    out.close();
    write_json(m.output("agreement.json"), {{"schema_version", kSchemaVersion}, {"entries", entries}});
    m.write();
    if (matched == 0) std::fprintf(stderr, "warning: no clustered trial has a chemical record\n");
    return 0;
}

// report ---------------------------------------------------------------------

int cmd_report(const Common& common, const std::string& run_dir) {
    if (!fs::is_directory(run_dir)) throw InputError("run directory '" + run_dir + "' not found");
    std::vector<fs::path> manifests;
    for (const auto& e : fs::recursive_directory_iterator(run_dir))
        if (e.is_regular_file() && e.path().filename() == "manifest.json") manifests.push_back(e.path());
    std::sort(manifests.begin(), manifests.end());

    Manifest m("report", common.out);
    json runs = json::array();
    std::ostringstream text;
    text << "run directory: " << run_dir << "\n";
    for (const auto& path : manifests) {
        if (fs::equivalent(path.parent_path(), m.dir())) continue;
        m.input(path);
        const json man = read_json(path);
        const fs::path dir = path.parent_path();
        json entry = {{"directory", fs::relative(dir, run_dir).string()},
                      {"command", man.value("command", "")},
                      {"seed", man.value("seed", 0)},
                      {"duration_seconds", man.value("duration_seconds", 0.0)}};
        text << "\n[" << entry["command"].get<std::string>() << "] " << entry["directory"].get<std::string>()
             << "\n";
        if (fs::is_regular_file(dir / "metrics.json")) {
            const json metrics = read_json(dir / "metrics.json");
            entry["test"] = metrics.at("test");
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "  test accuracy %.4f, pure vs heated %.4f, best gamma %g, best cost %g\n",
                          metrics["test"].value("overall_accuracy", 0.0),
                          metrics["test"]["pure_vs_heated_accuracy"].is_number()
                              ? metrics["test"]["pure_vs_heated_accuracy"].get<double>()
                              : 0.0,
                          metrics["grid"].value("best_gamma", 0.0), metrics["grid"].value("best_cost", 0.0));
            text << buf;
        }
        if (fs::is_regular_file(dir / "critical.csv")) {
            json crit = json::array();
            for (const auto& row : read_critical_csv(dir / "critical.csv")) {
                crit.push_back({{"trial", row.trial}, {"algorithm", row.algorithm}, {"critical", row.critical}});
                text << "  trial " << row.trial << " " << row.algorithm << ": {" << join_set(row.critical, ',')
                     << "}\n";
            }
            entry["critical"] = crit;
        }
        if (fs::is_regular_file(dir / "agreement.json")) {
            const json agr = read_json(dir / "agreement.json");
            entry["agreement"] = agr.at("entries");
            for (const auto& e : agr.at("entries"))
                text << "  trial " << e["trial"] << " " << e["algorithm"].get<std::string>() << " vs "
                     << e["property"].get<std::string>() << ": " << e["agreement"] << "\n";
        }
        runs.push_back(entry);
    }
    write_json(m.output("report.json"), {{"schema_version", kSchemaVersion}, {"runs", runs}});
    {
        std::ofstream out(m.output("report.txt"));
        out << text.str();
    }
    m.write();
    std::cout << text.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reheated-oil spectral analysis: simulate, preprocess, train, predict, cluster, eval, report"};
    app.require_subcommand(1);
    app.set_version_flag("--version", OILSPEC_VERSION);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config_path, "JSON config file");
        sub->add_option("--seed", common.seed, "random seed (overrides the config)");
        sub->add_option("--out", common.out, "output directory")->capture_default_str();
    };

    auto* simulate = app.add_subcommand("simulate", "generate a planted synthetic signature dataset");
    add_common(simulate);

    PreprocessArgs pre;
    auto* preprocess = app.add_subcommand("preprocess", "dark-subtract, filter and crop an MSIC cube");
    add_common(preprocess);
    preprocess->add_option("--cube", pre.cube, "raw MSIC cube")->required();
    preprocess->add_option("--dark", pre.dark, "dark-current MSIC frame")->required();
    preprocess->add_option("--row", pre.row, "window top row (default: centred)");
    preprocess->add_option("--col", pre.col, "window left column (default: centred)");
    preprocess->add_option("--side", pre.side, "window side in pixels")->capture_default_str();
    preprocess->add_option("--filter-half-width", pre.filter_half_width, "filter half width w")
        ->capture_default_str();
    preprocess->add_option("--filter", pre.filter, "mean or median")->capture_default_str();
    preprocess->add_option("--trial", pre.trial, "trial label for the output")->capture_default_str();
    preprocess->add_option("--class", pre.reheat_class, "reheat class label for the output")->capture_default_str();

    TrainArgs train_args;
    auto* train = app.add_subcommand("train", "Bhattacharyya features, grid-swept SVM, metrics");
    add_common(train);
    train->add_option("--signatures", train_args.signatures, "signature CSV")->required();
    train->add_option("--fda-dim", train_args.fda_dim, "FDA output dimension (0 = off)");

    std::string model_path, predict_signatures;
    int set_size = 135;
    auto* predict = app.add_subcommand("predict", "estimate reheat classes of signature sets");
    add_common(predict);
    predict->add_option("--model", model_path, "model.json from train")->required();
    predict->add_option("--signatures", predict_signatures, "signature CSV")->required();
    predict->add_option("--set-size", set_size, "signatures per set (0 = whole group)")->capture_default_str();

    ClusterArgs cluster_args;
    auto* cluster = app.add_subcommand("cluster", "sigma sweep, mode selection and spectral clustering");
    add_common(cluster);
    cluster->add_option("--signatures", cluster_args.signatures, "signature CSV")->required();
    cluster->add_option("--algorithm", cluster_args.algorithm, "LGV or LBW (default LBW)");
    cluster->add_option("--sigma-grid", cluster_args.sigma_grid, "lo:hi:points (log-spaced) or s1,s2,...");
    cluster->add_option("--mode-range", cluster_args.mode_range, "first:last eigengap modes (default 3:6)");
    cluster->add_option("--subsample", cluster_args.subsample, "signatures per class (<= 0 keeps all)");
    cluster->add_flag("--amalgamate", cluster_args.amalgamate, "cluster all trials together");

    std::string clusters_in, chemical_in;
    auto* eval = app.add_subcommand("eval", "agreement between spectral and chemical critical classes");
    add_common(eval);
    eval->add_option("--clusters", clusters_in, "cluster output directory or its critical.csv")->required();
    eval->add_option("--chemical", chemical_in, "chemical CSV")->required();

    std::string run_dir;
    auto* report = app.add_subcommand("report", "summarise every run found under a directory");
    add_common(report);
    report->add_option("--run", run_dir, "run directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*simulate) return cmd_simulate(common);
        if (*preprocess) return cmd_preprocess(common, pre);
        if (*train) return cmd_train(common, train_args);
        if (*predict) return cmd_predict(common, model_path, predict_signatures, set_size);
        if (*cluster) return cmd_cluster(common, cluster_args);
        if (*eval) return cmd_eval(common, clusters_in, chemical_in);
        if (*report) return cmd_report(common, run_dir);
    } catch (const ComputeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCompute;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "error: malformed JSON input: %s\n", e.what());
        return kExitInput;
    } catch (const fs::filesystem_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCompute;
    }
    return kExitInput;
}
