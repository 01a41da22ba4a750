#include "qwalk/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/oracle.hpp"

namespace qwalk::cli {
namespace {

constexpr std::int64_t kLongRun = 1000;

CorrelatedWalkState mirrored(const CorrelatedWalkState& s) {
  CorrelatedWalkState::Lanes l = s.lanes();
  for (auto* lane : {&l.re0, &l.im0, &l.re1, &l.im1}) std::reverse(lane->begin(), lane->end());
  return CorrelatedWalkState(s.step(), -s.last_position(), std::move(l));
}

CorrelatedWalkState kicked(const CorrelatedWalkState& s) {
  CorrelatedWalkState::Lanes l = s.lanes();
  for (std::size_t i = 0; i < l.re1.size(); ++i) {
    const double re = l.re1[i];
    l.re1[i] = -l.im1[i];
    l.im1[i] = re;
  }
  return CorrelatedWalkState(s.step(), s.first_position(), std::move(l));
}

CorrelatedWalkState leaked(const CorrelatedWalkState& s) {
  CorrelatedWalkState::Lanes l = s.lanes();
  for (auto* lane : {&l.re0, &l.im0, &l.re1, &l.im1}) {
    for (double& v : *lane) v *= 1.0 - 1e-9;
  }
  return CorrelatedWalkState(s.step(), s.first_position(), std::move(l));
}

std::vector<CorrelatedWalkState> trajectory(const ExperimentConfig& config, const Stepper& stepper,
                                            std::int64_t n) {
  std::vector<CorrelatedWalkState> out{new_correlated_state(config.coin_init, config.start_position)};
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t t = 0; t < n; ++t) out.push_back(stepper(out.back(), config.coin_operator));
  return out;
}

std::vector<NamedConfig> oracle_configs() {
  std::vector<NamedConfig> configs = canonical_initial_states();
  std::mt19937_64 rng(0x5eedC0111);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < 20; ++k) {
    const Complex a{gauss(rng), gauss(rng)};
    const Complex b{gauss(rng), gauss(rng)};
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    ExperimentConfig c;
    c.coin_init = {a / n, b / n};
    configs.push_back({"random" + std::to_string(k), c});
  }
  return configs;
}

double entropy_of(const CorrelatedWalkState& s, Coin c) {
  return von_neumann_entropy(schmidt_spectrum(post_measurement(s, c)));
}

class Collector {
 public:
  void add(std::string name, double error, double tolerance) {
    const bool ok = std::isfinite(error) && error <= tolerance;
    checks_.push_back({std::move(name), error, tolerance, ok});
  }
  VerifyReport finish() { return {std::move(checks_)}; }

 private:
  std::vector<CheckResult> checks_;
};

// Largest deviation of the engine's amplitudes from a list of expected terms
// (everything not listed must be zero).
struct Term {
  std::int64_t x;
  Coin c;
  double value;
};

double fixture_error(const CorrelatedWalkState& s, const std::vector<Term>& terms) {
  double err = 0.0;
  const std::int64_t reach = s.step() + 2;
  for (std::int64_t x = -reach; x <= reach; ++x) {
    for (Coin c : kCoins) {
      Complex expected{};
      for (const Term& t : terms) {
        if (t.x == x && t.c == c) expected += t.value;
      }
      err = std::max(err, std::abs(s.amplitude(x, c) - expected));
    }
  }
  return err;
}

void analytic_fixtures(Collector& out, const Stepper& stepper) {
  const auto traj = trajectory(preset("4a"), stepper, 3);
  const double h = 1.0 / std::sqrt(2.0);
  const double q = 1.0 / (2.0 * std::sqrt(2.0));

  out.add("fixture |psi_1> amplitudes", fixture_error(traj[1], {{1, Coin::c0, h}, {-1, Coin::c1, h}}), 1e-14);
  out.add("fixture |psi_2> amplitudes",
          fixture_error(traj[2], {{2, Coin::c0, 0.5}, {0, Coin::c1, 0.5}, {0, Coin::c0, 0.5}, {-2, Coin::c1, -0.5}}),
          1e-14);
  out.add("fixture |psi_3> amplitudes",
          fixture_error(traj[3], {{3, Coin::c0, q},
                                  {1, Coin::c1, q},
                                  {1, Coin::c0, q},
                                  {-1, Coin::c1, -q},
                                  {1, Coin::c0, q},
                                  {-1, Coin::c1, q},
                                  {-1, Coin::c0, -q},
                                  {-3, Coin::c1, q}}),
          1e-14);

  const auto safe_entropy = [&](std::size_t t, Coin c) {
    try {
      return entropy_of(traj[t], c);
    } catch (const std::exception&) {
      return std::nan("");
    }
  };
  out.add("fixture entropy t=1 (0, 0)", std::max(std::abs(safe_entropy(1, Coin::c0)), std::abs(safe_entropy(1, Coin::c1))),
          1e-12);
  out.add("fixture entropy t=2 (1, 1)",
          std::max(std::abs(safe_entropy(2, Coin::c0) - 1.0), std::abs(safe_entropy(2, Coin::c1) - 1.0)), 1e-12);
  out.add("fixture entropy t=3 c0 = 1.2516", std::abs(safe_entropy(3, Coin::c0) - 1.2516), 5e-5);
  out.add("fixture entropy t=3 c1 = 1", std::abs(safe_entropy(3, Coin::c1) - 1.0), 1e-12);
  out.add("fixture bound t=2 = 1", std::abs(max_entanglement(2) - 1.0), 1e-15);
  out.add("fixture bound t=3 = 1.585", std::abs(max_entanglement(3) - 1.585), 5e-4);
}

void dense_oracle(Collector& out, const Stepper& stepper, int depth) {
  double amp_err = 0.0, prob_err = 0.0, ent_err = 0.0, off_diag = 0.0;
  for (const NamedConfig& nc : oracle_configs()) {
    const auto traj = trajectory(nc.config, stepper, depth);
    for (std::int64_t t = 1; t <= depth; ++t) {
      const oracle::DenseTensorState dense = oracle::dense_evolve(nc.config, t, depth);
      off_diag = std::max(off_diag, dense.off_diagonal_mass());
      const CorrelatedWalkState& s = traj[static_cast<std::size_t>(t)];
      for (std::int64_t x = -depth; x <= depth; ++x) {
        for (Coin c : kCoins) amp_err = std::max(amp_err, std::abs(s.amplitude(x, c) - dense.amplitude(c, x, x)));
      }
      const auto [p0, p1] = outcome_probabilities(s);
      prob_err = std::max({prob_err, std::abs(p0 - dense.branch_probability(Coin::c0)),
                           std::abs(p1 - dense.branch_probability(Coin::c1))});
      for (Coin c : kCoins) {
        if (!(dense.branch_probability(c) > kBranchEpsilon)) continue;
        try {
          ent_err = std::max(ent_err, std::abs(entropy_of(s, c) - oracle::reduced_entropy(dense, c)));
        } catch (const std::exception&) {
          ent_err = std::numeric_limits<double>::infinity();
        }
      }
    }
  }
  out.add("dense oracle amplitudes, t <= " + std::to_string(depth), amp_err, 1e-10);
  out.add("dense oracle branch probabilities", prob_err, 1e-10);
  out.add("dense oracle partial-trace entropies", ent_err, 1e-10);
  out.add("dense oracle off-diagonal mass", off_diag, 1e-14);
}

void path_sum_oracle(Collector& out, const Stepper& stepper, int depth) {
  double err = 0.0;
  for (const NamedConfig& nc : oracle_configs()) {
    const auto traj = trajectory(nc.config, stepper, depth);
    for (std::int64_t t = 0; t <= depth; ++t) {
      const CorrelatedWalkState& s = traj[static_cast<std::size_t>(t)];
      for (std::int64_t x = -t - 1; x <= t + 1; ++x) {
        for (Coin c : kCoins) {
          err = std::max(err, std::abs(s.amplitude(x, c) - oracle::path_sum_amplitude(nc.config.coin_init, x, c, t)));
        }
      }
    }
  }
  out.add("path-sum amplitudes, t <= " + std::to_string(depth), err, 1e-12);
}

void long_run_invariants(Collector& out, const Stepper& stepper) {
  double norm_drift = 0.0, completeness = 0.0, bound_violation = 0.0;
  double parity_violations = 0.0;
  for (const char* name : {"4a", "4c", "4e"}) {
    CorrelatedWalkState s = new_correlated_state(preset(name).coin_init, 0);
    const CoinOperator h = hadamard();
    for (std::int64_t t = 1; t <= kLongRun; ++t) {
      s = stepper(s, h);
      norm_drift = std::max(norm_drift, std::abs(norm(s) - 1.0));
      double total = 0.0;
      const auto dist = position_distribution(s);
      for (const auto& [x, p] : dist) total += p;
      completeness = std::max(completeness, std::abs(total - 1.0));
      const auto supp = support(s);
      if (supp.size() > static_cast<std::size_t>(t) + 1) parity_violations += 1;
      for (std::int64_t x : supp) {
        if (std::abs(x) > t || (x - t) % 2 != 0) parity_violations += 1;
      }
      for (Coin c : kCoins) {
        try {
          const BranchState b = post_measurement(s, c);
          const double e = von_neumann_entropy(schmidt_spectrum(b));
          const double by_support = support_entanglement_bound(b);
          bound_violation = std::max({bound_violation, e - by_support, by_support - max_entanglement(t)});
        } catch (const EmptyBranchError&) {
        }
      }
    }
  }
  out.add("norm drift over 1000 steps", norm_drift, 1e-12);
  out.add("probability completeness over 1000 steps", completeness, 1e-12);
  out.add("parity and support-size violations", parity_violations, 0.0);
  out.add("entropy <= log2(support) <= log2(t)", std::max(bound_violation, 0.0), 1e-9);

  ExperimentConfig a = preset("4a"), b = preset("4b");
  a.steps = b.steps = kLongRun;
  const auto ta = run_timeline(a, stepper);
  const auto tb = run_timeline(b, stepper);
  double swap = 0.0;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!ta[i].entropy0 || !tb[i].entropy1 || !ta[i].entropy1 || !tb[i].entropy0) {
      swap = std::numeric_limits<double>::infinity();
      break;
    }
    swap = std::max({swap, std::abs(*ta[i].entropy0 - *tb[i].entropy1), std::abs(*ta[i].entropy1 - *tb[i].entropy0)});
  }
  out.add("swap symmetry entropy0(4a) = entropy1(4b), t <= 1000", swap, 1e-10);

  out.add("mirror symmetry of 4c single walker at t = 1000",
          symmetry_report(preset("4c").coin_init, kLongRun).mirror_distance, 1e-10);
}

}  // namespace

bool VerifyReport::all_passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::render() const {
  std::string out;
  char buf[64];
  for (const CheckResult& c : checks) {
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.name;
    std::snprintf(buf, sizeof buf, "  (error %.3g, tolerance %.3g)\n", c.error, c.tolerance);
    out += buf;
  }
  std::size_t failed = 0;
  for (const CheckResult& c : checks) failed += c.passed ? 0 : 1;
  out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  return out;
}

std::optional<Mutant> parse_mutant(std::string_view name) {
  if (name == "none") return Mutant::none;
  if (name == "mirror-shift") return Mutant::mirror_shift;
  if (name == "phase-kick") return Mutant::phase_kick;
  if (name == "amplitude-leak") return Mutant::amplitude_leak;
  return std::nullopt;
}

Stepper stepper_for(Mutant mutant) {
  switch (mutant) {
    case Mutant::none:
      break;
    case Mutant::mirror_shift:
      return [](const CorrelatedWalkState& s, const CoinOperator& c) { return mirrored(step(s, c)); };
    case Mutant::phase_kick:
      return [](const CorrelatedWalkState& s, const CoinOperator& c) { return kicked(step(s, c)); };
    case Mutant::amplitude_leak:
      return [](const CorrelatedWalkState& s, const CoinOperator& c) { return leaked(step(s, c)); };
  }
  return [](const CorrelatedWalkState& s, const CoinOperator& c) { return step(s, c); };
}

VerifyReport run_verification(int depth, Mutant mutant) {
  if (depth < 1 || depth > kMaxVerifyDepth) {
    throw std::invalid_argument("verify depth must be between 1 and " + std::to_string(kMaxVerifyDepth));
  }
  const Stepper stepper = stepper_for(mutant);
  Collector out;
  analytic_fixtures(out, stepper);
  dense_oracle(out, stepper, depth);
  path_sum_oracle(out, stepper, depth);
  long_run_invariants(out, stepper);
  return out.finish();
}

}  // namespace qwalk::cli
