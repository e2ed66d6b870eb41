#include "metchar/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "metchar/errors.hpp"

namespace metchar {

namespace {
using json = nlohmann::ordered_json;

json vector_json(const std::vector<std::int32_t>& v) { return json(v); }

json weights_json(const std::vector<double>& w) { return json(w); }

json component_names_json(const std::vector<ComponentId>& comps) {
  json arr = json::array();
  for (const auto& c : comps) arr.push_back(component_name(c));
  return arr;
}

std::vector<ComponentId> components_from_json(const json& arr) {
  std::vector<ComponentId> out;
  for (const auto& name : arr) out.push_back(parse_component(name.get<std::string>()));
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string bracketed(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

std::string table_from_rows(const std::vector<std::array<std::string, 4>>& rows) {
  std::array<std::size_t, 4> widths = {0, 0, 0, 0};
  for (const auto& row : rows)
    for (int c = 0; c < 4; ++c) widths[c] = std::max(widths[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    for (int c = 0; c < 4; ++c) {
      out += pad(row[c], widths[c]);
      if (c < 3) out += "  ";
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

std::string format_time(double secs) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", secs);
  return buf;
}
}  // namespace

std::string format_sig4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string feature_dump_line(const FeatureSet& fs, const std::string& label) {
  json j;
  j["label"] = label;
  j["size"] = fs.size;
  for (const FeatureId f : kAllFeatures) j[feature_name(f)] = vector_json(fs[f]);
  return j.dump();
}

std::string trained_metric_json(const TrainedMetric& tm, int normalization_size,
                                const MetCharConfig& cfg) {
  json j;
  j["schema"] = 1;
  j["size"] = normalization_size;
  j["components"] = component_names_json(tm.metric.components);
  j["weights"] = weights_json(tm.metric.weights);
  j["accuracy"] = tm.accuracy;
  j["best_round"] = tm.best_round;
  j["config"] = {{"epsilon", cfg.epsilon},
                 {"iterations", cfg.iterations},
                 {"seed", cfg.seed},
                 {"k", cfg.k}};
  json history = json::array();
  for (const auto& round : tm.history)
    history.push_back({{"weights", weights_json(round.weights)}, {"accuracy", round.accuracy}});
  j["history"] = std::move(history);
  return j.dump(2) + "\n";
}

TrainedMetric trained_metric_from_json(const std::string& text, int& normalization_size) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("metric file: invalid JSON: ") + e.what());
  }
  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    throw DataError("metric file: unsupported schema");
  TrainedMetric tm;
  normalization_size = j.at("size").get<int>();
  tm.metric.components = components_from_json(j.at("components"));
  tm.metric.weights = j.at("weights").get<std::vector<double>>();
  tm.accuracy = j.at("accuracy").get<double>();
  tm.best_round = j.value("best_round", std::size_t{0});
  if (j.contains("history")) {
    for (const auto& round : j["history"]) {
      TrainedMetric::Round r;
      r.weights = round.at("weights").get<std::vector<double>>();
      r.accuracy = round.at("accuracy").get<double>();
      tm.history.push_back(std::move(r));
    }
  }
  if (tm.metric.components.size() != tm.metric.weights.size())
    throw DataError("metric file: component/weight count mismatch");
  for (const double w : tm.metric.weights)
    if (w < 0.0) throw DataError("metric file: negative weight");
  return tm;
}

std::string weight_table(const TrainedMetric& tm) {
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"Component", "Weight", "", ""});
  for (std::size_t i = 0; i < tm.metric.components.size(); ++i)
    rows.push_back({component_name(tm.metric.components[i]),
                    format_sig4(tm.metric.weights[i]), "", ""});
  std::string out = table_from_rows(rows);
  out += "accuracy " + format_sig4(tm.accuracy) + "\n";
  return out;
}

std::string selection_report_json(const SelectionReport& report, int normalization_size,
                                  const SelectionConfig& cfg) {
  json j;
  j["schema"] = 1;
  j["size"] = normalization_size;
  j["strategy"] = strategy_name(cfg.strategy);
  j["registry"] = component_names_json(report.registry);
  j["theta"] = cfg.theta;
  j["config"] = {{"epsilon", cfg.metchar.epsilon},
                 {"iterations", cfg.metchar.iterations},
                 {"seed", cfg.metchar.seed},
                 {"k", cfg.metchar.k},
                 {"min_combo_size", cfg.min_combo}};
  json trials = json::array();
  for (const Trial& t : report.trials) {
    trials.push_back({{"components", component_names_json(t.components)},
                      {"weights", weights_json(t.weights)},
                      {"accuracy", t.accuracy}});
  }
  j["trials"] = std::move(trials);
  j["best"] = report.best;
  json pruned = json::array();
  for (const auto& [comp, acc] : report.pruned)
    pruned.push_back({{"component", component_name(comp)}, {"accuracy", acc}});
  j["pruned"] = std::move(pruned);
  j["budget_exhausted"] = report.budget_exhausted;
  j["all_pruned"] = report.all_pruned;
  return j.dump(2) + "\n";
}

std::string selection_table(const SelectionReport& report) {
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"Components", "Weights", "Time (s)", "Accuracy"});
  for (const Trial& t : report.trials) {
    std::vector<std::string> comps, weights;
    for (const auto& c : t.components) comps.push_back(component_name(c));
    for (const double w : t.weights) weights.push_back(format_sig4(w));
    rows.push_back({bracketed(comps), bracketed(weights), format_time(t.elapsed_secs),
                    format_sig4(t.accuracy)});
  }
  return table_from_rows(rows);
}

std::string eval_result_json(const EvalResult& result) {
  json j;
  j["schema"] = 1;
  j["accuracy"] = result.accuracy;
  j["confusion"] = {{"tp", result.confusion.tp},
                    {"tn", result.confusion.tn},
                    {"fp", result.confusion.fp},
                    {"fn", result.confusion.fn}};
  j["k"] = result.k;
  j["samples"] = result.samples;
  j["metric"] = {{"components", component_names_json(result.metric.components)},
                 {"weights", weights_json(result.metric.weights)}};
  return j.dump(2) + "\n";
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError(tmp.string() + ": cannot open for writing");
    out << content;
    if (!out) throw DataError(tmp.string() + ": write failed");
  }
  fs::rename(tmp, target);
}

}  // namespace metchar
