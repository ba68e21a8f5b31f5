#include "halfspace/key_value.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "halfspace/error.hpp"

namespace halfspace {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  std::string prefix;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    if (view.front() == '[') {
      if (view.back() != ']') {
        throw ParseError("line " + std::to_string(line_no) + ": unterminated section header");
      }
      prefix = std::string(trim(view.substr(1, view.size() - 2)));
      if (!prefix.empty()) prefix += '.';
      continue;
    }
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(view.substr(0, eq));
    if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty key");
    kv[prefix + std::string(key)] = std::string(trim(view.substr(eq + 1)));
  }
  return kv;
}

KeyValues load_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  return parse_key_values(in);
}

std::string format_key_values(const KeyValues& kv) {
  std::ostringstream out;
  for (const auto& [key, value] : kv) out << key << " = " << value << '\n';
  return out.str();
}

KeyValues section(const KeyValues& kv, std::string_view prefix) {
  KeyValues out;
  const std::string head = std::string(prefix) + '.';
  for (auto it = kv.lower_bound(head); it != kv.end() && it->first.starts_with(head); ++it) {
    out.emplace(it->first.substr(head.size()), it->second);
  }
  return out;
}

std::optional<std::string> find_value(const KeyValues& kv, const std::string& key) {
  if (const auto it = kv.find(key); it != kv.end()) return it->second;
  return std::nullopt;
}

std::string require_value(const KeyValues& kv, const std::string& key) {
  if (auto v = find_value(kv, key)) return *v;
  throw ParseError("missing required key '" + key + "'");
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(trim(text));
  if (s == "inf" || s == "infinity") return INFINITY;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw ParseError("cannot parse '" + s + "' as a number for " + std::string(what));
  }
  return v;
}

long long parse_integer(std::string_view text, std::string_view what) {
  const std::string s(trim(text));
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw ParseError("cannot parse '" + s + "' as an integer for " + std::string(what));
  }
  return v;
}

std::vector<double> parse_double_list(std::string_view text, char separator) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find(separator, start);
    if (stop == std::string_view::npos) stop = text.size();
    out.push_back(parse_double(text.substr(start, stop - start), "list element"));
    start = stop + 1;
  }
  return out;
}

double get_double(const KeyValues& kv, const std::string& key, double fallback) {
  if (auto v = find_value(kv, key)) return parse_double(*v, key);
  return fallback;
}

long long get_integer(const KeyValues& kv, const std::string& key, long long fallback) {
  if (auto v = find_value(kv, key)) return parse_integer(*v, key);
  return fallback;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

}  // namespace halfspace
