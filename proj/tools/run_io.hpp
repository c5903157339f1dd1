#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "oilspec/serialize.hpp"

namespace oilspec::cli {

namespace fs = std::filesystem;

/// Collects what a command read and wrote, then writes manifest.json next to
/// the outputs.
class Manifest {
public:
    Manifest(std::string command, fs::path out_dir);

    void input(const fs::path& p) { inputs_.push_back(p.string()); }
    fs::path output(const std::string& name);
    void set_seed(std::uint64_t seed) { seed_ = seed; }
    void set_config(json config) { config_ = std::move(config); }
    [[nodiscard]] const fs::path& dir() const { return dir_; }

    void write() const;

private:
    std::string command_;
    fs::path dir_;
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::uint64_t seed_ = 0;
    json config_ = json::object();
    std::chrono::steady_clock::time_point start_;
};

void write_json(const fs::path& path, const json& j);
json read_json(const fs::path& path);
/// Throws InputError naming `what` when the file is missing.
void require_file(const fs::path& path, const std::string& what);

std::string join_set(const std::set<int>& s, char sep = ' ');
std::set<int> parse_set(const std::string& text);

}  // namespace oilspec::cli
