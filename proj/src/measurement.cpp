#include "qwalk/measurement.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/simd.hpp"

namespace qwalk {

BranchState::BranchState(CoinOutcome outcome, std::int64_t step, double probability,
                         std::int64_t first, std::vector<double> re, std::vector<double> im)
    : outcome_(outcome),
      step_(step),
      probability_(probability),
      first_(first),
      re_(std::move(re)),
      im_(std::move(im)) {}

Complex BranchState::amplitude(std::int64_t x) const {
  if (x < first_ || x >= first_ + static_cast<std::int64_t>(width())) return {};
  const auto k = static_cast<std::size_t>(x - first_);
  return {re_[k], im_[k]};
}

std::vector<double> BranchState::weights() const {
  std::vector<double> w(width());
  simd::kernels().abs2(width(), re_.data(), im_.data(), w.data());
  return w;
}

std::vector<std::int64_t> BranchState::support() const {
  const std::vector<double> w = weights();
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > kSupportEpsilon) out.push_back(first_ + static_cast<std::int64_t>(i));
  }
  return out;
}

double BranchState::norm() const { return simd::kernels().sum_abs2(width(), re_.data(), im_.data()); }

std::pair<double, double> outcome_probabilities(const CorrelatedWalkState& state) {
  const auto& k = simd::kernels();
  const auto& l = state.lanes();
  return {k.sum_abs2(l.re0.size(), l.re0.data(), l.im0.data()),
          k.sum_abs2(l.re1.size(), l.re1.data(), l.im1.data())};
}

BranchState post_measurement(const CorrelatedWalkState& state, CoinOutcome outcome) {
  const auto& k = simd::kernels();
  const std::span<const double> re = state.re(outcome);
  const std::span<const double> im = state.im(outcome);
  const double p = k.sum_abs2(re.size(), re.data(), im.data());
  if (!(p > kBranchEpsilon)) {
    std::ostringstream msg;
    msg << "coin outcome c" << static_cast<int>(outcome) << " has probability " << p << " at step "
        << state.step();
    throw EmptyBranchError(msg.str());
  }
  std::vector<double> out_re(re.size()), out_im(im.size());
  k.scale(re.size(), re.data(), im.data(), 1.0 / std::sqrt(p), out_re.data(), out_im.data());
  return BranchState(outcome, state.step(), p, state.first_position(), std::move(out_re),
                     std::move(out_im));
}

MeasuredBranches measure_coin(const CorrelatedWalkState& state) {
  MeasuredBranches out;
  const auto [p0, p1] = outcome_probabilities(state);
  if (p0 > kBranchEpsilon) out.c0 = post_measurement(state, Coin::c0);
  if (p1 > kBranchEpsilon) out.c1 = post_measurement(state, Coin::c1);
  return out;
}

CorrelatedWalkState embed(const BranchState& branch) {
  const std::size_t n = branch.width();
  std::vector<double> zeros(n, 0.0);
  std::vector<double> re(branch.re().begin(), branch.re().end());
  std::vector<double> im(branch.im().begin(), branch.im().end());
  CorrelatedWalkState::Lanes lanes;
  if (branch.outcome() == Coin::c0) {
    lanes = {std::move(re), std::move(im), zeros, zeros};
  } else {
    lanes = {zeros, zeros, std::move(re), std::move(im)};
  }
  return CorrelatedWalkState(branch.step(), branch.first_position(), std::move(lanes));
}

}  // namespace qwalk
