#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "metchar/dataset.hpp"
#include "metchar/errors.hpp"
#include "metchar/serialize.hpp"

namespace fs = std::filesystem;

namespace metchar::cli {

namespace {

constexpr int kDefaultSize = 64;

struct LoadedDataset {
  std::vector<BinaryGlyph> glyphs;
  std::vector<FeatureSet> features;
  std::vector<int> labels;
  std::vector<std::string> label_names;
  int size = 0;
  int k = 0;
};

LoadedDataset load_dataset(const RunConfig& cfg, bool extract_features_too) {
  LoadedDataset ds;
  if (cfg.manifest) {
    ds.size = cfg.size.value_or(kDefaultSize);
    ds.glyphs = load_manifest(resolve_config_path(cfg, *cfg.manifest), ds.size);
  } else {
    const SynthSpec spec = load_synth_spec(resolve_config_path(cfg, *cfg.synth));
    if (cfg.size && *cfg.size != spec.grid_size)
      throw ConfigError("config `size` (" + std::to_string(*cfg.size) +
                        ") conflicts with synth spec grid size (" +
                        std::to_string(spec.grid_size) + ")");
    ds.size = spec.grid_size;
    ds.glyphs = generate_synthetic(spec);
  }
  auto [ids, names] = label_ids(ds.glyphs);
  ds.labels = std::move(ids);
  ds.label_names = std::move(names);
  ds.k = static_cast<int>(ds.label_names.size());
  if (extract_features_too) {
    ds.features.reserve(ds.glyphs.size());
    for (const BinaryGlyph& g : ds.glyphs) ds.features.push_back(extract_features(g));
  }
  return ds;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (fs::path(cfg.out_dir) / name).string();
}

MetCharConfig metchar_config_of(const RunConfig& cfg, int k) {
  MetCharConfig mc;
  mc.epsilon = cfg.epsilon;
  mc.iterations = cfg.iterations;
  mc.seed = cfg.seed;
  mc.k = k;
  return mc;
}

void require_trainable(const LoadedDataset& ds) {
  if (ds.k < 2) throw DataError("dataset has fewer than 2 distinct labels");
}

int select_exit_code(const SelectionReport& report) {
  if (report.all_pruned) return kExitAllPruned;
  if (report.budget_exhausted) return kExitBudget;
  return kExitOk;
}

}  // namespace

int cmd_extract(const RunConfig& cfg) {
  const LoadedDataset ds = load_dataset(cfg, true);
  std::string dump;
  for (std::size_t i = 0; i < ds.features.size(); ++i)
    dump += feature_dump_line(ds.features[i], ds.glyphs[i].label) + "\n";
  atomic_write_file(out_path(cfg, "features.jsonl"), dump);
  std::cout << "wrote " << ds.features.size() << " feature sets to "
            << out_path(cfg, "features.jsonl") << "\n";
  return kExitOk;
}

int cmd_train(const RunConfig& cfg) {
  const LoadedDataset ds = load_dataset(cfg, true);
  require_trainable(ds);
  const MetCharConfig mc = metchar_config_of(cfg, ds.k);
  const TrainedMetric tm = train_metric(ds.features, ds.labels, cfg.components, mc);
  atomic_write_file(out_path(cfg, "trained_metric.json"), trained_metric_json(tm, ds.size, mc));
  atomic_write_file(out_path(cfg, "weights.txt"), weight_table(tm));
  std::cout << "trained " << cfg.components.size() << " components, accuracy "
            << format_sig4(tm.accuracy) << "\n";
  return kExitOk;
}

int cmd_select(const RunConfig& cfg) {
  const LoadedDataset ds = load_dataset(cfg, true);
  require_trainable(ds);
  SelectionConfig sc = selection_config_of(cfg, ds.k);

  if (!cfg.compare_all) {
    const SelectionReport report = run_selection(cfg.components, ds.features, ds.labels, sc);
    atomic_write_file(out_path(cfg, "selection.json"),
                      selection_report_json(report, ds.size, sc));
    atomic_write_file(out_path(cfg, "selection_table.txt"), selection_table(report));
    std::cout << "ran " << report.trials.size() << " trials, best accuracy "
              << format_sig4(report.trials.empty() ? 0.0 : report.trials[report.best].accuracy)
              << "\n";
    return select_exit_code(report);
  }

  // strategy = all: run the three strategies under the same budget and
  // emit an algorithm/accuracy comparison next to the individual reports.
  int exit_code = kExitOk;
  std::string comparison_txt = "Algorithm      Accuracy\n";
  nlohmann::ordered_json comparison;
  comparison["schema"] = 1;
  comparison["results"] = nlohmann::ordered_json::array();
  const Strategy order[] = {Strategy::exhaustive, Strategy::greedy, Strategy::hybrid};
  for (std::size_t i = 0; i < 3; ++i) {
    sc.strategy = order[i];
    const SelectionReport report = run_selection(cfg.components, ds.features, ds.labels, sc);
    const std::string name = strategy_name(order[i]);
    atomic_write_file(out_path(cfg, "selection_" + name + ".json"),
                      selection_report_json(report, ds.size, sc));
    atomic_write_file(out_path(cfg, "selection_" + name + "_table.txt"),
                      selection_table(report));
    const double best_acc = report.trials.empty() ? 0.0 : report.trials[report.best].accuracy;
    comparison_txt += name + std::string(15 - name.size(), ' ') + format_sig4(best_acc) + "\n";
    comparison["results"].push_back({{"algorithm", name}, {"accuracy", best_acc}});
    const int code = select_exit_code(report);
    if (code > exit_code) exit_code = code;
  }
  atomic_write_file(out_path(cfg, "comparison.txt"), comparison_txt);
  atomic_write_file(out_path(cfg, "comparison.json"), comparison.dump(2) + "\n");
  std::cout << comparison_txt;
  return exit_code;
}

int cmd_eval(const RunConfig& cfg) {
  const std::string metric_file = resolve_config_path(cfg, *cfg.metric_path);
  std::ifstream in(metric_file);
  if (!in) throw DataError(metric_file + ": cannot open metric file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  int metric_size = 0;
  const TrainedMetric tm = trained_metric_from_json(text, metric_size);
  if (cfg.size && *cfg.size != metric_size)
    throw ConfigError("config `size` (" + std::to_string(*cfg.size) +
                      ") conflicts with the metric's normalization size (" +
                      std::to_string(metric_size) + ")");

  const std::vector<BinaryGlyph> glyphs =
      load_manifest(resolve_config_path(cfg, *cfg.manifest), metric_size);
  if (glyphs.size() < 2) throw DataError("eval needs at least 2 samples");
  auto [labels, names] = label_ids(glyphs);
  const int k = static_cast<int>(names.size());

  std::vector<FeatureSet> features;
  features.reserve(glyphs.size());
  for (const BinaryGlyph& g : glyphs) features.push_back(extract_features(g));

  const ClusteringResult clusters = kmeans(features, k, tm.metric, cfg.seed);
  EvalResult result;
  result.confusion = score_pairs(labels, clusters.assignments);
  result.accuracy = result.confusion.accuracy();
  result.metric = tm.metric;
  result.k = k;
  result.samples = glyphs.size();
  atomic_write_file(out_path(cfg, "eval.json"), eval_result_json(result));
  std::cout << "evaluated " << glyphs.size() << " samples, accuracy "
            << format_sig4(result.accuracy) << "\n";
  return kExitOk;
}

int cmd_synth(const RunConfig& cfg) {
  const SynthSpec spec = load_synth_spec(resolve_config_path(cfg, *cfg.synth));
  const std::vector<BinaryGlyph> glyphs = generate_synthetic(spec);
  const std::string manifest = write_dataset_pgm(glyphs, cfg.out_dir);
  std::cout << "wrote " << glyphs.size() << " glyphs and " << manifest << "\n";
  return kExitOk;
}

}  // namespace metchar::cli
