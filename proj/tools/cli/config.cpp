#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "polyana/error.hpp"

namespace polyana::cli {

namespace {

[[noreturn]] void fail(const std::string& path, int line, int col, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

}  // namespace

std::vector<ConfigEntry> parse_config(const std::string& text, const std::string& path) {
  std::vector<ConfigEntry> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw.substr(0, raw.find('#'));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) continue;
    const std::size_t key_start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '-' || s[i] == '_')) ++i;
    if (i == key_start) fail(path, line, static_cast<int>(i + 1), "expected a key");
    ConfigEntry e;
    e.key = s.substr(key_start, i - key_start);
    e.line = line;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size() || s[i] != '=') fail(path, line, static_cast<int>(i + 1), "expected '=' after '" + e.key + "'");
    ++i;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) fail(path, line, static_cast<int>(i + 1), "missing value for '" + e.key + "'");
    e.column = static_cast<int>(i + 1);
    e.value = s.substr(i);
    if (e.value.size() >= 2 && e.value.front() == '"' && e.value.back() == '"')
      e.value = e.value.substr(1, e.value.size() - 2);
    for (const ConfigEntry& prev : out)
      if (prev.key == e.key)
        fail(path, line, static_cast<int>(key_start + 1),
             "duplicate key '" + e.key + "' (first set on line " + std::to_string(prev.line) + ")");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ConfigEntry> load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, path + ": cannot open config file");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path);
}

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  for (const std::string& a : args)
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  return false;
}

}  // namespace polyana::cli
