#include "metchar/selection.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "metchar/rng.hpp"

namespace metchar {

namespace {
const std::array<std::string, 3> kStrategyNames = {"exhaustive", "greedy", "hybrid"};

using Clock = std::chrono::steady_clock;

std::uint64_t subset_mask(std::span<const std::size_t> indices) {
  std::uint64_t mask = 0;
  for (const std::size_t i : indices) mask |= std::uint64_t{1} << i;
  return mask;
}

// All index subsets of `pool` with sizes in [lo, hi], sizes ascending and
// lexicographic within a size. Enumeration order is part of the contract:
// budget-truncated runs stay reproducible.
std::vector<std::vector<std::size_t>> enumerate_subsets(std::span<const std::size_t> pool,
                                                        std::size_t lo, std::size_t hi) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = pool.size();
  if (lo < 1) lo = 1;
  hi = std::min(hi, n);
  for (std::size_t size = lo; size <= hi; ++size) {
    std::vector<std::size_t> pos(size);  // positions into `pool`, combination walk
    for (std::size_t i = 0; i < size; ++i) pos[i] = i;
    while (true) {
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = pool[pos[i]];
      out.push_back(std::move(pick));
      // advance the rightmost position that still has room
      std::size_t j = size;
      bool done = true;
      while (j-- > 0) {
        if (pos[j] != j + n - size) {
          done = false;
          break;
        }
      }
      if (done) break;
      ++pos[j];
      for (std::size_t l = j + 1; l < size; ++l) pos[l] = pos[l - 1] + 1;
    }
  }
  return out;
}

struct TrialContext {
  std::span<const ComponentId> registry;
  std::span<const FeatureSet> features;
  std::span<const int> labels;
  const DistanceTensor* tensor = nullptr;  // over the full registry
  const SelectionConfig* cfg = nullptr;
};

Trial run_one_trial(const TrialContext& ctx, const std::vector<std::size_t>& subset) {
  const auto t0 = Clock::now();
  const DistanceTensor sub = ctx.tensor->subset(subset);
  MetCharConfig mc = ctx.cfg->metchar;
  mc.seed = trial_seed(ctx.cfg->metchar.seed, subset_mask(subset));
  const TrainedMetric tm = train_metric(ctx.features, ctx.labels, sub.components(), sub, mc);
  Trial trial;
  trial.subset = subset;
  trial.components = sub.components();
  trial.weights = tm.metric.weights;
  trial.accuracy = tm.accuracy;
  trial.elapsed_secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return trial;
}

// Runs the specs in order, stopping at the first claim past the deadline.
// Claims are handed out by a monotone counter, so the completed set is
// always a prefix of `specs` regardless of worker count.
std::vector<Trial> run_trials(const TrialContext& ctx,
                              const std::vector<std::vector<std::size_t>>& specs,
                              const std::optional<Clock::time_point>& deadline,
                              bool any_done_before, bool& exhausted) {
  std::vector<Trial> slots(specs.size());
  std::vector<char> done(specs.size(), 0);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      const bool first_overall = !any_done_before && i == 0;
      if (deadline && !first_overall && Clock::now() >= *deadline) return;
      slots[i] = run_one_trial(ctx, specs[i]);
      done[i] = 1;
    }
  };

  std::size_t workers = std::max<std::size_t>(1, ctx.cfg->workers);
  workers = std::min(workers, std::max<std::size_t>(1, specs.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::size_t completed = 0;
  while (completed < specs.size() && done[completed]) ++completed;
  exhausted = completed < specs.size();
  slots.resize(completed);
  return slots;
}

std::size_t best_trial(const std::vector<Trial>& trials) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < trials.size(); ++i)
    if (trials[i].accuracy > trials[best].accuracy) best = i;
  return best;
}

void validate(std::span<const ComponentId> registry, const SelectionConfig& cfg) {
  if (registry.empty()) throw std::invalid_argument("selection: empty component registry");
  if (registry.size() > 64)
    throw std::invalid_argument("selection: registry larger than 64 components");
  if (cfg.theta < 0.0 || cfg.theta > 1.0)
    throw std::invalid_argument("selection: theta must be in [0, 1]");
  if (cfg.budget_secs && *cfg.budget_secs <= 0.0)
    throw std::invalid_argument("selection: budget must be positive");
  if (cfg.min_combo < 2) throw std::invalid_argument("selection: min combo size must be >= 2");
  if (cfg.max_combo < cfg.min_combo)
    throw std::invalid_argument("selection: max combo size below min combo size");
  for (std::size_t i = 0; i < registry.size(); ++i)
    for (std::size_t j = i + 1; j < registry.size(); ++j)
      if (registry[i] == registry[j])
        throw std::invalid_argument("selection: duplicate component " +
                                    component_name(registry[i]));
}

std::vector<std::vector<std::size_t>> singles_of(std::size_t p) {
  std::vector<std::vector<std::size_t>> out(p);
  for (std::size_t i = 0; i < p; ++i) out[i] = {i};
  return out;
}

std::optional<Clock::time_point> make_deadline(const SelectionConfig& cfg) {
  if (!cfg.budget_secs) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*cfg.budget_secs));
}

}  // namespace

const std::string& strategy_name(Strategy s) { return kStrategyNames[static_cast<int>(s)]; }

Strategy parse_strategy(const std::string& name) {
  for (int i = 0; i < 3; ++i)
    if (kStrategyNames[i] == name) return static_cast<Strategy>(i);
  throw std::invalid_argument("unknown strategy: " + name);
}

std::uint64_t trial_seed(std::uint64_t global_seed, std::uint64_t mask) {
  return splitmix64(global_seed ^ splitmix64(mask));
}

std::vector<std::pair<ComponentId, double>> single_component_accuracies(
    std::span<const ComponentId> registry, std::span<const FeatureSet> features,
    std::span<const int> labels, const SelectionConfig& cfg) {
  validate(registry, cfg);
  const DistanceTensor tensor = build_tensor(registry, features);
  TrialContext ctx{registry, features, labels, &tensor, &cfg};
  bool exhausted = false;
  const auto trials = run_trials(ctx, singles_of(registry.size()), std::nullopt, false, exhausted);
  std::vector<std::pair<ComponentId, double>> out;
  out.reserve(trials.size());
  for (const Trial& t : trials) out.emplace_back(t.components[0], t.accuracy);
  return out;
}

SelectionReport exhaustive_selection(std::span<const ComponentId> registry,
                                     std::span<const FeatureSet> features,
                                     std::span<const int> labels, const SelectionConfig& cfg) {
  validate(registry, cfg);
  const auto deadline = make_deadline(cfg);
  const DistanceTensor tensor = build_tensor(registry, features);
  TrialContext ctx{registry, features, labels, &tensor, &cfg};

  std::vector<std::size_t> pool(registry.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  auto specs = singles_of(registry.size());
  for (auto& s : enumerate_subsets(pool, cfg.min_combo, cfg.max_combo)) specs.push_back(std::move(s));

  SelectionReport report;
  report.registry.assign(registry.begin(), registry.end());
  report.trials = run_trials(ctx, specs, deadline, false, report.budget_exhausted);
  report.best = best_trial(report.trials);
  return report;
}

SelectionReport greedy_selection(std::span<const ComponentId> registry,
                                 std::span<const FeatureSet> features,
                                 std::span<const int> labels, const SelectionConfig& cfg) {
  validate(registry, cfg);
  const auto deadline = make_deadline(cfg);
  const DistanceTensor tensor = build_tensor(registry, features);
  TrialContext ctx{registry, features, labels, &tensor, &cfg};

  SelectionReport report;
  report.registry.assign(registry.begin(), registry.end());
  report.trials = run_trials(ctx, singles_of(registry.size()), deadline, false,
                             report.budget_exhausted);
  if (!report.budget_exhausted) {
    // Rank singles by accuracy, ties toward the lower canonical index.
    std::vector<std::size_t> order(report.trials.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return report.trials[a].accuracy > report.trials[b].accuracy;
    });

    std::vector<std::vector<std::size_t>> prefixes;
    for (std::size_t j = 2; j <= order.size(); ++j) {
      std::vector<std::size_t> prefix(order.begin(), order.begin() + j);
      std::sort(prefix.begin(), prefix.end());  // canonical subset form
      prefixes.push_back(std::move(prefix));
    }
    bool phase2_exhausted = false;
    auto phase2 = run_trials(ctx, prefixes, deadline, true, phase2_exhausted);
    for (auto& t : phase2) report.trials.push_back(std::move(t));
    report.budget_exhausted = phase2_exhausted;
  }
  report.best = best_trial(report.trials);
  return report;
}

SelectionReport hybrid_selection(std::span<const ComponentId> registry,
                                 std::span<const FeatureSet> features,
                                 std::span<const int> labels, const SelectionConfig& cfg) {
  validate(registry, cfg);
  const auto deadline = make_deadline(cfg);
  const DistanceTensor tensor = build_tensor(registry, features);
  TrialContext ctx{registry, features, labels, &tensor, &cfg};

  SelectionReport report;
  report.registry.assign(registry.begin(), registry.end());
  report.trials = run_trials(ctx, singles_of(registry.size()), deadline, false,
                             report.budget_exhausted);
  if (!report.budget_exhausted) {
    std::vector<std::size_t> survivors;
    for (const Trial& t : report.trials) {
      if (t.accuracy < cfg.theta) {
        report.pruned.emplace_back(t.components[0], t.accuracy);
      } else {
        survivors.push_back(t.subset[0]);
      }
    }
    if (survivors.empty()) {
      report.all_pruned = true;
    } else {
      const auto specs = enumerate_subsets(survivors, cfg.min_combo, cfg.max_combo);
      bool phase2_exhausted = false;
      auto phase2 = run_trials(ctx, specs, deadline, true, phase2_exhausted);
      for (auto& t : phase2) report.trials.push_back(std::move(t));
      report.budget_exhausted = phase2_exhausted;
    }
  }
  report.best = best_trial(report.trials);
  return report;
}

SelectionReport run_selection(std::span<const ComponentId> registry,
                              std::span<const FeatureSet> features,
                              std::span<const int> labels, const SelectionConfig& cfg) {
  switch (cfg.strategy) {
    case Strategy::exhaustive: return exhaustive_selection(registry, features, labels, cfg);
    case Strategy::greedy: return greedy_selection(registry, features, labels, cfg);
    case Strategy::hybrid: return hybrid_selection(registry, features, labels, cfg);
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace metchar
