#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rachsim::csv {

/// Splits one line on commas. Double-quoted fields may contain commas and ""
/// escapes. A trailing '\r' is dropped.
std::vector<std::string> split(std::string_view line);

/// Quotes the field only if it contains a comma, quote or newline.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

/// Fixed-point with `digits` decimals, '.' separator regardless of locale.
std::string format_fixed(double value, int digits = 6);

/// Empty string for nullopt.
std::string format_optional(const std::optional<double>& value, int digits = 6);

std::string trim(std::string_view s);

/// Strict parses; nullopt on any trailing garbage.
std::optional<long long> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

}  // namespace rachsim::csv
