#pragma once

#include <filesystem>
#include <string>

#include "frontstab/simulator.hpp"

namespace frontstab {

/// Parses flat `key = value` text. `#` starts a comment; blank lines are
/// ignored. Keys are the SimConfig field names; alpha and theta are the model
/// parameters and `init` is `disc` or `planar_wave`. Unknown, duplicate or
/// malformed entries throw ConfigError naming the line. alpha, theta and t_end
/// are required; the result is validated.
SimConfig parse_sim_config(const std::string& text);

/// Reads and parses a config file. Errors are prefixed with the path.
SimConfig load_sim_config(const std::filesystem::path& path);

/// Every field, one per line, doubles at 17 significant digits, so that
/// parse_sim_config(format_sim_config(c)) reproduces c exactly.
std::string format_sim_config(const SimConfig& c);

}  // namespace frontstab
