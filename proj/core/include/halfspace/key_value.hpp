#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace halfspace {

/// Flat `key = value` configuration. Section headers `[name]` prefix the
/// keys that follow with `name.`; dotted keys may also be written directly.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in);
KeyValues load_key_values(const std::filesystem::path& path);
std::string format_key_values(const KeyValues& kv);

/// Entries under `prefix.`, with the prefix stripped.
KeyValues section(const KeyValues& kv, std::string_view prefix);

std::optional<std::string> find_value(const KeyValues& kv, const std::string& key);
std::string require_value(const KeyValues& kv, const std::string& key);

double parse_double(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);
std::vector<double> parse_double_list(std::string_view text, char separator = ',');

double get_double(const KeyValues& kv, const std::string& key, double fallback);
long long get_integer(const KeyValues& kv, const std::string& key, long long fallback);

/// `%.9g` rendering used for every floating value the tools emit.
std::string format_double(double value);

}  // namespace halfspace
