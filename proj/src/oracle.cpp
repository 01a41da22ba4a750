#include "qwalk/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk::oracle {

DenseTensorState::DenseTensorState(std::int64_t step, std::int64_t radius)
    : step_(step), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("dense oracle radius must be non-negative");
  amps_.assign(static_cast<std::size_t>(2 * side() * side()), Complex{});
}

std::size_t DenseTensorState::index(Coin c, std::int64_t x1, std::int64_t x2) const {
  const std::int64_t n = side();
  return static_cast<std::size_t>((static_cast<std::int64_t>(c) * n + (x1 + radius_)) * n + (x2 + radius_));
}

Complex DenseTensorState::amplitude(Coin c, std::int64_t x1, std::int64_t x2) const {
  if (std::abs(x1) > radius_ || std::abs(x2) > radius_) return {};
  return amps_[index(c, x1, x2)];
}

Complex& DenseTensorState::at(Coin c, std::int64_t x1, std::int64_t x2) {
  if (std::abs(x1) > radius_ || std::abs(x2) > radius_) {
    throw std::out_of_range("dense oracle index outside the lattice");
  }
  return amps_[index(c, x1, x2)];
}

double DenseTensorState::norm() const {
  double s = 0.0;
  for (const Complex& z : amps_) s += std::norm(z);
  return s;
}

double DenseTensorState::off_diagonal_mass() const {
  double s = 0.0;
  for (Coin c : kCoins) {
    for (std::int64_t x1 = -radius_; x1 <= radius_; ++x1) {
      for (std::int64_t x2 = -radius_; x2 <= radius_; ++x2) {
        if (x1 != x2) s += std::norm(amplitude(c, x1, x2));
      }
    }
  }
  return s;
}

double DenseTensorState::branch_probability(Coin c) const {
  double s = 0.0;
  for (std::int64_t x1 = -radius_; x1 <= radius_; ++x1) {
    for (std::int64_t x2 = -radius_; x2 <= radius_; ++x2) s += std::norm(amplitude(c, x1, x2));
  }
  return s;
}

DenseTensorState dense_evolve(const ExperimentConfig& config, std::int64_t t, std::int64_t radius) {
  if (t < 0) throw std::invalid_argument("dense_evolve: t must be non-negative");
  if (std::abs(config.start_position) + t > radius) {
    throw std::invalid_argument("dense_evolve: lattice radius too small for t steps");
  }
  if (!config.coin_init.is_normalized()) throw NormalizationError("dense_evolve: coin not normalized");

  DenseTensorState psi(0, radius);
  const std::int64_t x0 = config.start_position;
  psi.at(Coin::c0, x0, x0) = config.coin_init.amp0;
  psi.at(Coin::c1, x0, x0) = config.coin_init.amp1;

  const CoinOperator& u = config.coin_operator;
  for (std::int64_t s = 1; s <= t; ++s) {
    // (C (x) I): mix coin amplitudes independently at every (x1, x2).
    DenseTensorState mixed(s, radius);
    for (std::int64_t x1 = -radius; x1 <= radius; ++x1) {
      for (std::int64_t x2 = -radius; x2 <= radius; ++x2) {
        const Complex a0 = psi.amplitude(Coin::c0, x1, x2);
        const Complex a1 = psi.amplitude(Coin::c1, x1, x2);
        mixed.at(Coin::c0, x1, x2) = u(0, 0) * a0 + u(0, 1) * a1;
        mixed.at(Coin::c1, x1, x2) = u(1, 0) * a0 + u(1, 1) * a1;
      }
    }
    // S_ent: |0>|i,i> -> |0>|i+1,i+1>, |1>|i,i> -> |1>|i-1,i-1>. Its action
    // on off-diagonal kets is not specified, so any amplitude there would
    // be carried along unchanged; dense_evolve never produces one.
    DenseTensorState shifted(s, radius);
    for (std::int64_t x1 = -radius; x1 <= radius; ++x1) {
      for (std::int64_t x2 = -radius; x2 <= radius; ++x2) {
        const Complex a0 = mixed.amplitude(Coin::c0, x1, x2);
        const Complex a1 = mixed.amplitude(Coin::c1, x1, x2);
        if (x1 == x2) {
          if (a0 != Complex{}) shifted.at(Coin::c0, x1 + 1, x2 + 1) += a0;
          if (a1 != Complex{}) shifted.at(Coin::c1, x1 - 1, x2 - 1) += a1;
        } else {
          shifted.at(Coin::c0, x1, x2) += a0;
          shifted.at(Coin::c1, x1, x2) += a1;
        }
      }
    }
    psi = std::move(shifted);
  }
  return psi;
}

std::vector<double> reduced_density_eigenvalues(const DenseTensorState& state, Coin outcome) {
  const double p = state.branch_probability(outcome);
  if (!(p > kBranchEpsilon)) throw EmptyBranchError("reduced_entropy: empty coin branch");

  const std::int64_t r = state.radius();
  const auto n = static_cast<Eigen::Index>(state.side());
  // M(x1, x2) = <x1, x2 | psi_c>, normalized; rho_A = M M^dagger.
  Eigen::MatrixXcd m(n, n);
  const double inv = 1.0 / std::sqrt(p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = state.amplitude(outcome, i - r, j - r) * inv;
  }
  const Eigen::MatrixXcd rho = m * m.adjoint();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("reduced_entropy: eigensolver failed");

  std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (double& v : eig) {
    if (v < 1e-14) v = 0.0;
  }
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

double reduced_entropy(const DenseTensorState& state, Coin outcome) {
  double s = 0.0;
  for (double v : reduced_density_eigenvalues(state, outcome)) {
    if (v > 0.0) s -= v * std::log2(v);
  }
  return std::max(s, 0.0);
}

Complex path_sum_amplitude(const CoinSpinor& coin_init, std::int64_t x, Coin c, std::int64_t t,
                           const CoinOperator& coin, std::int64_t start) {
  if (t < 0 || t > kMaxPathSumSteps) {
    throw std::invalid_argument("path_sum_amplitude: t must be in [0, " +
                                std::to_string(kMaxPathSumSteps) + "]");
  }
  const int target = static_cast<int>(c);
  if (t == 0) return x == start ? coin_init[c] : Complex{};

  Complex total{};
  const std::uint64_t histories = std::uint64_t{1} << t;
  // Bit k of `h` is the coin value after step k + 1.
  for (std::uint64_t h = 0; h < histories; ++h) {
    if (static_cast<int>((h >> (t - 1)) & 1U) != target) continue;
    std::int64_t pos = start;
    for (std::int64_t k = 0; k < t; ++k) pos += ((h >> k) & 1U) ? -1 : +1;
    if (pos != x) continue;

    for (int c0 = 0; c0 < 2; ++c0) {
      Complex w = coin_init[static_cast<Coin>(c0)];
      int prev = c0;
      for (std::int64_t k = 0; k < t; ++k) {
        const int next = static_cast<int>((h >> k) & 1U);
        w *= coin(next, prev);
        prev = next;
      }
      total += w;
    }
  }
  return total;
}

}  // namespace qwalk::oracle
