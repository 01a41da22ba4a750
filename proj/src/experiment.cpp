#include "qwalk/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "qwalk/errors.hpp"

namespace qwalk {

void ExperimentConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("experiment needs at least one step");
  if (!coin_init.is_normalized()) throw NormalizationError("experiment coin state is not normalized");
}

std::vector<TimelineRecord> run_timeline(const ExperimentConfig& config) {
  return run_timeline(config, [](const CorrelatedWalkState& s, const CoinOperator& c) { return step(s, c); });
}

std::vector<TimelineRecord> run_timeline(const ExperimentConfig& config, const Stepper& stepper) {
  config.validate();
  std::vector<TimelineRecord> timeline;
  timeline.reserve(static_cast<std::size_t>(config.steps));

  CorrelatedWalkState state = new_correlated_state(config.coin_init, config.start_position);
  for (std::int64_t t = 1; t <= config.steps; ++t) {
    state = stepper(state, config.coin_operator);

    TimelineRecord rec;
    rec.step = t;
    std::tie(rec.p0, rec.p1) = outcome_probabilities(state);
    rec.max_entropy = max_entanglement(t);

    const MeasuredBranches branches = measure_coin(state);
    if (branches.c0) {
      const EntanglementRecord e = quantify(*branches.c0);
      rec.entropy0 = e.entropy;
      rec.ratio0 = e.ratio;
      rec.support0 = e.support_size;
    }
    if (branches.c1) {
      const EntanglementRecord e = quantify(*branches.c1);
      rec.entropy1 = e.entropy;
      rec.ratio1 = e.ratio;
      rec.support1 = e.support_size;
    }
    timeline.push_back(rec);
  }
  return timeline;
}

std::size_t default_window(std::size_t steps) { return steps / 10 > 0 ? steps / 10 : 1; }

double asymptotic_ratio(const std::vector<TimelineRecord>& timeline, CoinOutcome outcome,
                        std::size_t window) {
  if (window == 0) throw std::invalid_argument("asymptotic_ratio: empty window");
  if (window > timeline.size()) throw std::invalid_argument("asymptotic_ratio: window exceeds timeline");
  double sum = 0.0;
  for (std::size_t i = timeline.size() - window; i < timeline.size(); ++i) {
    const std::optional<double>& r = timeline[i].ratio(outcome);
    if (!r) {
      throw std::invalid_argument("asymptotic_ratio: ratio missing at step " +
                                  std::to_string(timeline[i].step));
    }
    sum += *r;
  }
  return sum / static_cast<double>(window);
}

std::vector<NamedConfig> canonical_initial_states() {
  const double s = 1.0 / std::sqrt(2.0);
  const auto make = [](Complex a0, Complex a1) {
    ExperimentConfig c;
    c.coin_init = {a0, a1};
    return c;
  };
  return {
      {"4a", make({1.0, 0.0}, {0.0, 0.0})},
      {"4b", make({0.0, 0.0}, {1.0, 0.0})},
      {"4c", make({s, 0.0}, {0.0, s})},
      {"4d", make({0.0, s}, {s, 0.0})},
      {"4e", make({std::sqrt(0.85), 0.0}, {-std::sqrt(0.15), 0.0})},
  };
}

ExperimentConfig preset(const std::string& name) {
  for (auto& nc : canonical_initial_states()) {
    if (nc.name == name) return nc.config;
  }
  throw std::out_of_range("unknown preset '" + name + "' (expected 4a, 4b, 4c, 4d or 4e)");
}

double mirror_distance(const SingleWalkerState& state) {
  const auto dist = position_distribution(state);
  const auto prob = [&](std::int64_t x) {
    const auto it = dist.find(x);
    return it == dist.end() ? 0.0 : it->second;
  };
  const std::int64_t reach = std::max(std::abs(state.first_position()), std::abs(state.last_position()));
  double tv = 0.0;
  for (std::int64_t x = 1; x <= reach; ++x) tv += std::abs(prob(x) - prob(-x));
  return tv;
}

SymmetryReport symmetry_report(const CoinSpinor& coin_init, std::int64_t steps,
                               const CoinOperator& coin) {
  if (steps < 1) throw std::invalid_argument("symmetry_report: steps must be >= 1");
  const SingleWalkerState final_state = evolve_single(new_single_state(coin_init, 0), coin, steps);

  SymmetryReport rep;
  rep.steps = steps;
  double mean = 0.0;
  for (const auto& [x, p] : position_distribution(final_state)) mean += static_cast<double>(x) * p;
  rep.mean_position_over_t = mean / static_cast<double>(steps);
  rep.mirror_distance = mirror_distance(final_state);
  return rep;
}

}  // namespace qwalk
