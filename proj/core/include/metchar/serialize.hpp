#pragma once

#include <string>

#include "metchar/dataset.hpp"
#include "metchar/optimizer.hpp"
#include "metchar/selection.hpp"

namespace metchar {

// All report JSON carries a top-level `"schema": 1`. JSON output is fully
// deterministic for identical inputs (ordered fields, shortest round-trip
// float formatting); wall-clock timings are confined to the text tables.

// One JSON line per sample: label plus the seven profile vectors.
std::string feature_dump_line(const FeatureSet& fs, const std::string& label);

std::string trained_metric_json(const TrainedMetric& tm, int normalization_size,
                                const MetCharConfig& cfg);
// Parses a trained-metric report; fills the normalization size back out.
TrainedMetric trained_metric_from_json(const std::string& text, int& normalization_size);

// Human-readable component/weight table (4 significant digits).
std::string weight_table(const TrainedMetric& tm);

std::string selection_report_json(const SelectionReport& report, int normalization_size,
                                  const SelectionConfig& cfg);
// Components | Weights | Time (s) | Accuracy, one row per trial.
std::string selection_table(const SelectionReport& report);

struct EvalResult {
  double accuracy = 0.0;
  ConfusionCounts confusion;
  WeightedMetric metric;
  int k = 0;
  std::size_t samples = 0;
};

std::string eval_result_json(const EvalResult& result);

// Shortest round-trip decimal formatting, 4 significant digits for tables.
std::string format_sig4(double v);

// Writes via a temp file in the same directory followed by a rename.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace metchar
