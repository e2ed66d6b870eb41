#include "metchar/runconfig.hpp"

#include <filesystem>

#include "metchar/errors.hpp"
#include "metchar/kvfile.hpp"

namespace fs = std::filesystem;

namespace metchar {

namespace {

template <typename T, typename Parser>
T parse_or(const KvEntry& e, const std::string& path, Parser parse) {
  try {
    return parse(e.value);
  } catch (...) {
    throw ConfigError(path + ":" + std::to_string(e.line) + ": bad value for `" + e.key +
                      "`: `" + e.value + "`");
  }
}

long long to_ll(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters");
  return v;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters");
  return v;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
  RunConfig cfg;
  cfg.config_dir = fs::path(path).parent_path().string();

  std::vector<KvEntry> entries;
  try {
    entries = parse_kv_file(path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());  // the config file itself is configuration
  }
  std::optional<std::string> out_raw;  // resolved against the config dir below
  for (const KvEntry& e : entries) {
    if (e.key == "manifest") {
      cfg.manifest = e.value;
    } else if (e.key == "synth") {
      cfg.synth = e.value;
    } else if (e.key == "size") {
      cfg.size = static_cast<int>(parse_or<long long>(e, path, to_ll));
    } else if (e.key == "components") {
      cfg.components.clear();
      for (const std::string& name : split_list(e.value, ',')) {
        try {
          cfg.components.push_back(parse_component(name));
        } catch (const std::invalid_argument& ex) {
          throw ConfigError(path + ":" + std::to_string(e.line) + ": " + ex.what());
        }
      }
    } else if (e.key == "strategy") {
      if (e.value == "all") {
        cfg.compare_all = true;
      } else {
        try {
          cfg.strategy = parse_strategy(e.value);
        } catch (const std::invalid_argument& ex) {
          throw ConfigError(path + ":" + std::to_string(e.line) + ": " + ex.what());
        }
      }
    } else if (e.key == "theta") {
      cfg.theta = parse_or<double>(e, path, to_double);
    } else if (e.key == "epsilon") {
      cfg.epsilon = parse_or<double>(e, path, to_double);
    } else if (e.key == "iterations") {
      cfg.iterations = static_cast<int>(parse_or<long long>(e, path, to_ll));
    } else if (e.key == "seed") {
      cfg.seed = parse_or<std::uint64_t>(
          e, path, [](const std::string& s) { return std::stoull(s); });
    } else if (e.key == "budget_secs") {
      cfg.budget_secs = parse_or<double>(e, path, to_double);
    } else if (e.key == "workers") {
      cfg.workers = static_cast<std::size_t>(parse_or<long long>(e, path, to_ll));
    } else if (e.key == "min_combo_size") {
      cfg.min_combo = static_cast<std::size_t>(parse_or<long long>(e, path, to_ll));
    } else if (e.key == "max_combo_size") {
      cfg.max_combo = static_cast<std::size_t>(parse_or<long long>(e, path, to_ll));
    } else if (e.key == "out") {
      out_raw = e.value;
    } else if (e.key == "metric") {
      cfg.metric_path = e.value;
    } else {
      throw ConfigError(path + ":" + std::to_string(e.line) + ": unknown key `" + e.key + "`");
    }
  }
  if (out_raw) cfg.out_dir = resolve_config_path(cfg, *out_raw);
  return cfg;
}

std::string resolve_config_path(const RunConfig& cfg, const std::string& rel) {
  const fs::path p(rel);
  if (p.is_absolute() || cfg.config_dir.empty()) return rel;
  return (fs::path(cfg.config_dir) / p).string();
}

void validate_run_config(const RunConfig& cfg, Command cmd) {
  std::vector<std::string> errors;
  const bool needs_dataset = cmd != Command::synth;  // synth only reads the spec

  if (needs_dataset) {
    if (cmd == Command::eval) {
      if (!cfg.manifest) errors.push_back("eval requires `manifest` (the test set)");
      if (cfg.synth) errors.push_back("eval takes a manifest, not a synth spec");
    } else if (cfg.manifest && cfg.synth) {
      errors.push_back("set exactly one dataset source, found both `manifest` and `synth`");
    } else if (!cfg.manifest && !cfg.synth) {
      errors.push_back("missing dataset source: set `manifest` or `synth`");
    }
  } else if (!cfg.synth) {
    errors.push_back("synth requires a `synth` spec path");
  }

  if (cfg.manifest && !fs::exists(resolve_config_path(cfg, *cfg.manifest)))
    errors.push_back("manifest not found: " + resolve_config_path(cfg, *cfg.manifest));
  if (cfg.synth && !fs::exists(resolve_config_path(cfg, *cfg.synth)))
    errors.push_back("synth spec not found: " + resolve_config_path(cfg, *cfg.synth));

  if (cfg.size && *cfg.size < 1) errors.push_back("`size` must be >= 1");
  if (cfg.components.empty()) errors.push_back("`components` must name at least one component");
  for (std::size_t i = 0; i < cfg.components.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.components.size(); ++j)
      if (cfg.components[i] == cfg.components[j])
        errors.push_back("duplicate component `" + component_name(cfg.components[i]) + "`");

  if (cmd == Command::train || cmd == Command::select) {
    if (cfg.epsilon <= 0.0) errors.push_back("`epsilon` must be positive");
    if (cfg.iterations < 1) errors.push_back("`iterations` must be >= 1");
  }
  if (cmd == Command::select) {
    if (cfg.theta < 0.0 || cfg.theta > 1.0) errors.push_back("`theta` must be in [0, 1]");
    if (cfg.budget_secs && *cfg.budget_secs <= 0.0)
      errors.push_back("`budget_secs` must be positive");
    if (cfg.workers < 1) errors.push_back("`workers` must be >= 1");
    if (cfg.min_combo < 2) errors.push_back("`min_combo_size` must be >= 2");
    if (cfg.max_combo && *cfg.max_combo < cfg.min_combo)
      errors.push_back("`max_combo_size` must be >= `min_combo_size`");
  }
  if (cmd == Command::eval) {
    if (!cfg.metric_path) {
      errors.push_back("eval requires `metric` (a trained metric report)");
    } else if (!fs::exists(resolve_config_path(cfg, *cfg.metric_path))) {
      errors.push_back("metric file not found: " + resolve_config_path(cfg, *cfg.metric_path));
    }
  }

  if (!errors.empty()) {
    std::string msg = "invalid configuration:";
    for (const std::string& e : errors) msg += "\n  - " + e;
    throw ConfigError(msg);
  }
}

SelectionConfig selection_config_of(const RunConfig& cfg, int k) {
  SelectionConfig sc;
  sc.strategy = cfg.strategy;
  sc.theta = cfg.theta;
  sc.budget_secs = cfg.budget_secs;
  sc.metchar.epsilon = cfg.epsilon;
  sc.metchar.iterations = cfg.iterations;
  sc.metchar.seed = cfg.seed;
  sc.metchar.k = k;
  sc.min_combo = cfg.min_combo;
  sc.max_combo = cfg.max_combo.value_or(SIZE_MAX);
  sc.workers = cfg.workers;
  return sc;
}

}  // namespace metchar
