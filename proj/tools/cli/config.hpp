#pragma once

#include <string>
#include <vector>

namespace polyana::cli {

struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
  int column = 0;  // column of the value
};

// Key-value file: one "key = value" per line, '#' starts a comment. Keys are
// long flag names without the leading dashes. Throws Error(ParseError) with
// "path:line:column: message".
std::vector<ConfigEntry> parse_config(const std::string& text, const std::string& path = "<config>");
std::vector<ConfigEntry> load_config(const std::string& path);

// True when args already set --key (as "--key" or "--key=...").
bool has_flag(const std::vector<std::string>& args, const std::string& key);

}  // namespace polyana::cli
