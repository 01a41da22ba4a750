#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qwalk/walk_state.hpp"

namespace qwalk {

// Outcome labels of the coin observable; kept symbolic.
using CoinOutcome = Coin;

// A branch with probability at or below this is treated as absent.
inline constexpr double kBranchEpsilon = 1e-12;

// Normalized walker state sum_x b(x)|x,x> left after the coin was found in
// `outcome`, together with the probability of that outcome.
class BranchState {
 public:
  CoinOutcome outcome() const { return outcome_; }
  std::int64_t step() const { return step_; }
  double probability() const { return probability_; }
  std::int64_t first_position() const { return first_; }
  std::size_t width() const { return re_.size(); }

  Complex amplitude(std::int64_t x) const;
  std::span<const double> re() const { return re_; }
  std::span<const double> im() const { return im_; }

  // |b(x)|^2 over the window, in position order.
  std::vector<double> weights() const;

  // Ascending positions with |b(x)|^2 > kSupportEpsilon.
  std::vector<std::int64_t> support() const;

  double norm() const;

 private:
  friend BranchState post_measurement(const CorrelatedWalkState&, CoinOutcome);
  BranchState(CoinOutcome outcome, std::int64_t step, double probability, std::int64_t first,
              std::vector<double> re, std::vector<double> im);

  CoinOutcome outcome_;
  std::int64_t step_;
  double probability_;
  std::int64_t first_;
  std::vector<double> re_, im_;
};

// (p0, p1): total weight of the coin-0 and coin-1 components.
std::pair<double, double> outcome_probabilities(const CorrelatedWalkState& state);

// Projects the coin onto `outcome` and renormalizes the walker part.
// Throws EmptyBranchError if the outcome probability is <= kBranchEpsilon.
BranchState post_measurement(const CorrelatedWalkState& state, CoinOutcome outcome);

// Both branches of one snapshot; an absent branch is std::nullopt.
struct MeasuredBranches {
  std::optional<BranchState> c0;
  std::optional<BranchState> c1;

  const std::optional<BranchState>& operator[](CoinOutcome c) const { return c == Coin::c0 ? c0 : c1; }
};

MeasuredBranches measure_coin(const CorrelatedWalkState& state);

// |outcome>_c (x) branch, i.e. the post-measurement state with its coin
// restored.
CorrelatedWalkState embed(const BranchState& branch);

}  // namespace qwalk
