#pragma once

// Entanglement-per-step experiment: prepare |coin> (x) |x0, x0>, evolve t
// steps, measure the coin, and quantify the walker-walker entanglement of
// each post-measurement branch, for every t = 1..n.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/entanglement.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk {

struct ExperimentConfig {
  CoinSpinor coin_init{Complex{1.0}, Complex{}};
  std::int64_t start_position = 0;
  std::int64_t steps = 1000;
  CoinOperator coin_operator = hadamard();

  // Throws std::invalid_argument (steps < 1) or NormalizationError.
  void validate() const;
};

struct TimelineRecord {
  std::int64_t step = 0;
  double p0 = 0.0;
  double p1 = 0.0;
  std::optional<double> entropy0;
  std::optional<double> entropy1;
  double max_entropy = 0.0;
  std::optional<double> ratio0;
  std::optional<double> ratio1;
  // Number of positions in each branch's Schmidt spectrum; 0 when absent.
  std::size_t support0 = 0;
  std::size_t support1 = 0;

  const std::optional<double>& entropy(Coin c) const { return c == Coin::c0 ? entropy0 : entropy1; }
  const std::optional<double>& ratio(Coin c) const { return c == Coin::c0 ? ratio0 : ratio1; }

  friend bool operator==(const TimelineRecord&, const TimelineRecord&) = default;
};

// Records for t = 1..config.steps. An empty branch leaves its entropy and
// ratio unset instead of failing.
std::vector<TimelineRecord> run_timeline(const ExperimentConfig& config);

using Stepper = std::function<CorrelatedWalkState(const CorrelatedWalkState&, const CoinOperator&)>;

// Same, with a substitute for step(); the verification harness uses this to
// run deliberately broken engines.
std::vector<TimelineRecord> run_timeline(const ExperimentConfig& config, const Stepper& stepper);

// Last 10% of the steps, at least one.
std::size_t default_window(std::size_t steps);

// Mean of the outcome's ratio over the last `window` records. Throws
// std::invalid_argument for an empty or oversized window, or when a ratio in
// the window is missing.
double asymptotic_ratio(const std::vector<TimelineRecord>& timeline, CoinOutcome outcome,
                        std::size_t window);

struct NamedConfig {
  std::string name;
  ExperimentConfig config;
};

// The five published coin initial states, at position 0 with 1000 steps:
// 4a (1, 0); 4b (0, 1); 4c (1/sqrt2, i/sqrt2); 4d (i/sqrt2, 1/sqrt2);
// 4e (sqrt 0.85, -sqrt 0.15).
std::vector<NamedConfig> canonical_initial_states();

// Looks up a preset by name ("4a".."4e"). Throws std::out_of_range.
ExperimentConfig preset(const std::string& name);

struct SymmetryReport {
  std::int64_t steps = 0;
  // <x> / t of the single-walker distribution.
  double mean_position_over_t = 0.0;
  // 1/2 sum_x |P(x) - P(-x)|
  double mirror_distance = 0.0;
};

// Runs the single-walker walk from |coin_init> (x) |0> for `steps` steps.
SymmetryReport symmetry_report(const CoinSpinor& coin_init, std::int64_t steps,
                               const CoinOperator& coin = hadamard());

// Total-variation distance between P(x) and P(-x).
double mirror_distance(const SingleWalkerState& state);

}  // namespace qwalk
