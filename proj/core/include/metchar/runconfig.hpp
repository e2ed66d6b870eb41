#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metchar/selection.hpp"

namespace metchar {

enum class Command { extract, train, select, eval, synth };

// Flat `key = value` run configuration shared by every subcommand; each
// command reads the subset of keys it needs. Paths are resolved relative
// to the config file's directory.
struct RunConfig {
  std::optional<std::string> manifest;  // dataset source: exactly one of these
  std::optional<std::string> synth;
  std::optional<int> size;              // normalization S; defaults to 64 for manifests
  std::vector<ComponentId> components = default_registry();

  Strategy strategy = Strategy::hybrid;
  bool compare_all = false;             // `strategy = all`: run all three, emit a comparison
  double theta = 0.0;
  double epsilon = 0.05;
  int iterations = 10;
  std::uint64_t seed = 1;
  std::optional<double> budget_secs;
  std::size_t workers = 1;
  std::size_t min_combo = 2;
  std::optional<std::size_t> max_combo;

  std::string out_dir = ".";
  std::optional<std::string> metric_path;  // eval: frozen metric report

  std::string config_dir;  // directory of the config file, for path resolution
};

RunConfig load_run_config(const std::string& path);

// Collects every problem for the given command and throws one ConfigError
// listing all of them. Also checks that referenced input files exist.
void validate_run_config(const RunConfig& cfg, Command cmd);

// Resolves a config-relative path.
std::string resolve_config_path(const RunConfig& cfg, const std::string& rel);

SelectionConfig selection_config_of(const RunConfig& cfg, int k);

}  // namespace metchar
