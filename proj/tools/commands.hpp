#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace blbc::cli {

using json = nlohmann::json;

inline constexpr const char* kManifestName = "manifest.json";

/// Runs a command from its fully resolved parameter object and writes its data
/// files into out_dir. Returns the file names written. The CLI and the replay
/// path both land here, so a manifest reproduces the original bytes.
std::vector<std::string> run_command(const std::string& command, const json& params,
                                     const std::filesystem::path& out_dir);

/// Writes manifest.json next to the outputs.
void write_manifest(const std::string& command, const json& params, const std::vector<std::string>& outputs,
                    const std::filesystem::path& out_dir);

/// Re-runs the command recorded in a manifest into out_dir.
std::vector<std::string> replay(const std::filesystem::path& manifest, const std::filesystem::path& out_dir);

}  // namespace blbc::cli
