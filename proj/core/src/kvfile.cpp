#include "metchar/kvfile.hpp"

#include <fstream>

#include "metchar/errors.hpp"

namespace metchar {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    const std::string piece = trim(s.substr(start, pos == std::string::npos ? pos : pos - start));
    if (!piece.empty()) out.push_back(piece);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<KvEntry> parse_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");

  std::vector<KvEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected `key = value`");
    KvEntry e;
    e.key = trim(t.substr(0, eq));
    e.value = trim(t.substr(eq + 1));
    e.line = lineno;
    if (e.key.empty())
      throw DataError(path + ":" + std::to_string(lineno) + ": empty key");
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace metchar
