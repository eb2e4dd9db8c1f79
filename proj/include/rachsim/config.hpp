#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "rachsim/sweep.hpp"

namespace rachsim {

/// Ordered `key = value` pairs. '#' starts a comment; blank lines are ignored.
using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Throws ConfigError citing the line for anything that is not `key = value`.
ConfigEntries parse_config(std::istream& in);
ConfigEntries parse_config_file(const std::filesystem::path& path);

/// Applies one key. Unknown keys and unparsable values throw ConfigError naming
/// the key. List values are comma separated.
void set_config_value(SweepSpec& spec, const std::string& key, const std::string& value);

void apply_config(SweepSpec& spec, const ConfigEntries& entries);

/// Every recognised key with its current value, in documentation order.
ConfigEntries dump_config(const SweepSpec& spec);

}  // namespace rachsim
