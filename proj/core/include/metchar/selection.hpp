#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metchar/optimizer.hpp"

namespace metchar {

enum class Strategy { exhaustive, greedy, hybrid };

const std::string& strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);  // throws std::invalid_argument

struct SelectionConfig {
  Strategy strategy = Strategy::hybrid;
  double theta = 0.0;                      // hybrid prune threshold on single accuracy
  std::optional<double> budget_secs;       // wall-clock cap, checked between trials
  MetCharConfig metchar;                   // metchar.seed doubles as the global seed
  std::size_t min_combo = 2;               // bounds on multi-component subset size
  std::size_t max_combo = SIZE_MAX;
  std::size_t workers = 1;
};

struct Trial {
  std::vector<std::size_t> subset;      // canonical indices into the searched registry
  std::vector<ComponentId> components;  // same subset, resolved
  std::vector<double> weights;          // best-round weights of the trial
  double accuracy = 0.0;
  double elapsed_secs = 0.0;            // wall clock; presentation only
};

struct SelectionReport {
  std::vector<ComponentId> registry;  // the candidate pool searched
  std::vector<Trial> trials;          // in deterministic enumeration order
  std::size_t best = 0;               // index of the winning trial (earliest max)
  std::vector<std::pair<ComponentId, double>> pruned;  // hybrid phase-1 casualties
  bool budget_exhausted = false;
  bool all_pruned = false;
};

// Deterministic per-trial seed: a subset is encoded as the bitmask of its
// canonical indices, so a given subset trains identically no matter which
// strategy, ordering or worker count reached it.
std::uint64_t trial_seed(std::uint64_t global_seed, std::uint64_t subset_mask);

// Evaluates every component alone (one single-component trial each).
std::vector<std::pair<ComponentId, double>> single_component_accuracies(
    std::span<const ComponentId> registry, std::span<const FeatureSet> features,
    std::span<const int> labels, const SelectionConfig& cfg);

// Every non-empty subset in (size, lexicographic) order.
SelectionReport exhaustive_selection(std::span<const ComponentId> registry,
                                     std::span<const FeatureSet> features,
                                     std::span<const int> labels, const SelectionConfig& cfg);

// Singles ranked by accuracy, then the top-2..top-p prefixes: 2p-1 trials.
SelectionReport greedy_selection(std::span<const ComponentId> registry,
                                 std::span<const FeatureSet> features,
                                 std::span<const int> labels, const SelectionConfig& cfg);

// Phase 1 evaluates all singles and prunes those below theta; phase 2
// searches every subset of the survivors. At most p + 2^s trials.
SelectionReport hybrid_selection(std::span<const ComponentId> registry,
                                 std::span<const FeatureSet> features,
                                 std::span<const int> labels, const SelectionConfig& cfg);

// Dispatch on cfg.strategy.
SelectionReport run_selection(std::span<const ComponentId> registry,
                              std::span<const FeatureSet> features,
                              std::span<const int> labels, const SelectionConfig& cfg);

}  // namespace metchar
