#pragma once

#include <string>
#include <vector>

namespace metchar {

// One `key = value` line of a flat config file.
struct KvEntry {
  std::string key;
  std::string value;
  int line = 0;
};

// Parses a flat UTF-8 `key = value` file. Lines starting with '#' and blank
// lines are ignored; repeated keys are preserved in order. Throws DataError
// with the offending line number on malformed lines.
std::vector<KvEntry> parse_kv_file(const std::string& path);

std::string trim(const std::string& s);
std::vector<std::string> split_list(const std::string& s, char sep);

}  // namespace metchar
