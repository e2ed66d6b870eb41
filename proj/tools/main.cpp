#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "metchar/errors.hpp"

namespace {

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<double> budget_secs;
  std::optional<std::size_t> workers;
};

void apply(const Overrides& ov, metchar::RunConfig& cfg) {
  if (ov.seed) cfg.seed = *ov.seed;
  if (ov.out) cfg.out_dir = *ov.out;
  if (ov.budget_secs) cfg.budget_secs = *ov.budget_secs;
  if (ov.workers) cfg.workers = *ov.workers;
}

int dispatch(metchar::Command cmd, const std::string& config_path, const Overrides& ov) {
  using namespace metchar;
  try {
    RunConfig cfg = load_run_config(config_path);
    apply(ov, cfg);
    validate_run_config(cfg, cmd);
    switch (cmd) {
      case Command::extract: return cli::cmd_extract(cfg);
      case Command::train: return cli::cmd_train(cfg);
      case Command::select: return cli::cmd_select(cfg);
      case Command::eval: return cli::cmd_eval(cfg);
      case Command::synth: return cli::cmd_synth(cfg);
    }
    return cli::kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitData;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpretable weighted-component distance metric learning for glyph clustering"};
  app.require_subcommand(1);

  struct Sub {
    metchar::Command cmd;
    CLI::App* sub;
    std::string config;
    Overrides ov;
  };
  std::vector<Sub> subs;
  const std::pair<metchar::Command, std::pair<const char*, const char*>> defs[] = {
      {metchar::Command::extract, {"extract", "Dump per-sample feature vectors as JSON lines"}},
      {metchar::Command::train, {"train", "Optimize component weights on a fixed component list"}},
      {metchar::Command::select, {"select", "Search component subsets (exhaustive/greedy/hybrid)"}},
      {metchar::Command::eval, {"eval", "Cluster a test manifest with a frozen metric"}},
      {metchar::Command::synth, {"synth", "Emit a synthetic dataset as PGM files plus manifest"}},
  };
  subs.reserve(5);
  for (const auto& [cmd, nd] : defs) {
    CLI::App* sub = app.add_subcommand(nd.first, nd.second);
    subs.push_back({cmd, sub, {}, {}});
    Sub& s = subs.back();
    sub->add_option("--config", s.config, "Run configuration file")->required();
    sub->add_option("--seed", s.ov.seed, "Override the config seed");
    sub->add_option("--out", s.ov.out, "Override the output directory");
    sub->add_option("--budget-secs", s.ov.budget_secs, "Override the wall-clock budget");
    sub->add_option("--workers", s.ov.workers, "Override the worker count");
  }

  CLI11_PARSE(app, argc, argv);

  for (const Sub& s : subs)
    if (s.sub->parsed()) return dispatch(s.cmd, s.config, s.ov);
  return metchar::cli::kExitConfig;
}
