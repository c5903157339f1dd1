#include "run_io.hpp"

#include <fstream>
#include <sstream>

#include "oilspec/error.hpp"

#ifndef OILSPEC_VERSION
#define OILSPEC_VERSION "unknown"
#endif

namespace oilspec::cli {

Manifest::Manifest(std::string command, fs::path out_dir)
    : command_(std::move(command)), dir_(std::move(out_dir)), start_(std::chrono::steady_clock::now()) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw InputError("cannot create output directory '" + dir_.string() + "': " + ec.message());
}

fs::path Manifest::output(const std::string& name) {
    outputs_.push_back(name);
    return dir_ / name;
}

void Manifest::write() const {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::vector<std::string> outputs = outputs_;
    outputs.push_back("manifest.json");
    write_json(dir_ / "manifest.json", {{"schema_version", kSchemaVersion},
                                        {"command", command_},
                                        {"version", OILSPEC_VERSION},
                                        {"seed", seed_},
                                        {"config", config_},
                                        {"inputs", inputs_},
                                        {"outputs", outputs},
                                        {"duration_seconds", secs}});
}

void write_json(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

json read_json(const fs::path& path) {
    require_file(path, "JSON input");
    std::ifstream in(path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void require_file(const fs::path& path, const std::string& what) {
    if (!fs::is_regular_file(path)) throw InputError(what + ": file '" + path.string() + "' not found");
}

std::string join_set(const std::set<int>& s, char sep) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += sep;
        out += std::to_string(v);
    }
    return out;
}

std::set<int> parse_set(const std::string& text) {
    std::set<int> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            out.insert(std::stoi(tok));
        } catch (const std::exception&) {
            throw InputError("bad class id '" + tok + "'");
        }
    }
    return out;
}

}  // namespace oilspec::cli
