#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace frontstab {

/// Tool version string recorded in every manifest.
const char* tool_version();

/// Executes a named command (wave, dispersion, map, levelset, simulate,
/// validate) with a JSON parameter object, writing its files and run.json into
/// out_dir and progress text to log. Missing parameters take their defaults.
/// Returns 0 on success and 1 when validation fails. Throws ConfigError for
/// unknown commands or bad parameters and DomainError for parameters outside
/// the model's domain.
int run_command(const std::string& command, const nlohmann::json& params,
                const std::filesystem::path& out_dir, std::ostream& log);

/// Re-runs the command recorded in a run.json into out_dir.
int replay(const std::filesystem::path& manifest, const std::filesystem::path& out_dir,
           std::ostream& log);

}  // namespace frontstab
