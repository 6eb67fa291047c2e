#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace studentpar::cli {

// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

std::string version_string();

// manifest.json in `out_dir`:
//   {"tool", "version", "mode", "seed", "config", "wall_clock_ms",
//    "outputs": [{"path", "bytes", "sha256"}], "summary"}
// Output paths are relative to `out_dir`. wall_clock_ms is the only field
// that differs between two runs of the same config.
void write_manifest(const std::filesystem::path& out_dir, const std::string& mode,
                    std::uint64_t seed, const nlohmann::json& config,
                    const std::vector<std::string>& outputs, const nlohmann::json& summary,
                    double wall_clock_ms);

// Every listed output exists and its hash matches.
bool verify_manifest(const std::filesystem::path& out_dir, std::string* problem = nullptr);

// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace studentpar::cli
