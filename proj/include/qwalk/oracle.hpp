#pragma once

// Slow reference engines used to cross-check the fast path. Nothing here
// shares code with evolution.cpp or the SIMD kernels.
//
//  - DenseTensorState / dense_evolve: the full coin (x) walker1 (x) walker2
//    amplitude array on [-R, R]^2, stepped with explicit three-index
//    bookkeeping, and reduced_entropy via eigenvalues of the partial trace.
//  - path_sum_amplitude: sum over all 2^t coin histories.

#include <cstdint>
#include <vector>

#include "qwalk/experiment.hpp"

namespace qwalk::oracle {

class DenseTensorState {
 public:
  DenseTensorState(std::int64_t step, std::int64_t radius);

  std::int64_t step() const { return step_; }
  std::int64_t radius() const { return radius_; }
  std::int64_t side() const { return 2 * radius_ + 1; }

  // Zero outside the lattice.
  Complex amplitude(Coin c, std::int64_t x1, std::int64_t x2) const;
  Complex& at(Coin c, std::int64_t x1, std::int64_t x2);

  double norm() const;
  double off_diagonal_mass() const;
  double branch_probability(Coin c) const;

 private:
  std::size_t index(Coin c, std::int64_t x1, std::int64_t x2) const;

  std::int64_t step_;
  std::int64_t radius_;
  std::vector<Complex> amps_;
};

// U^t |config.coin_init> (x) |x0, x0> on [-radius, radius]^2. Throws
// std::invalid_argument unless |x0| + t <= radius.
DenseTensorState dense_evolve(const ExperimentConfig& config, std::int64_t t, std::int64_t radius);

// Eigenvalues of rho_A = Tr_B |psi_c><psi_c| for the normalized coin-c
// branch, in descending order; values below 1e-14 are zeroed.
std::vector<double> reduced_density_eigenvalues(const DenseTensorState& state, Coin outcome);

// -sum lambda log2 lambda over reduced_density_eigenvalues. Throws
// EmptyBranchError when the branch probability is <= kBranchEpsilon.
double reduced_entropy(const DenseTensorState& state, Coin outcome);

inline constexpr std::int64_t kMaxPathSumSteps = 20;

// <c, x | U^t | coin_init, start>, summing over every coin history.
// Throws std::invalid_argument for t < 0 or t > kMaxPathSumSteps.
Complex path_sum_amplitude(const CoinSpinor& coin_init, std::int64_t x, Coin c, std::int64_t t,
                           const CoinOperator& coin = hadamard(), std::int64_t start = 0);

}  // namespace qwalk::oracle
