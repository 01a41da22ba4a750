#include <gtest/gtest.h>

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/oracle.hpp"

namespace {

using namespace qwalk;
using namespace qwalk::oracle;

const double kH = 1.0 / std::sqrt(2.0);
const CoinSpinor kUp{Complex{1.0}, Complex{}};

ExperimentConfig up_config() { return {kUp, 0, 3, hadamard()}; }

TEST(DenseEvolve, OneStepFromUp) {
  const DenseTensorState s = dense_evolve(up_config(), 1, 3);
  EXPECT_EQ(s.step(), 1);
  EXPECT_NEAR(std::abs(s.amplitude(Coin::c0, 1, 1) - kH), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(s.amplitude(Coin::c1, -1, -1) - kH), 0.0, 1e-16);
  EXPECT_EQ(s.amplitude(Coin::c0, 1, -1), Complex{});
  EXPECT_EQ(s.amplitude(Coin::c0, 50, 1), Complex{});
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_EQ(s.off_diagonal_mass(), 0.0);
}

TEST(DenseEvolve, ThreeStepsFromUp) {
  const DenseTensorState s = dense_evolve(up_config(), 3, 3);
  const double q = 1.0 / (2.0 * std::sqrt(2.0));
  EXPECT_NEAR(s.amplitude(Coin::c0, 1, 1).real(), 2 * q, 1e-15);
  EXPECT_NEAR(s.amplitude(Coin::c0, -1, -1).real(), -q, 1e-15);
  EXPECT_NEAR(s.amplitude(Coin::c1, -3, -3).real(), q, 1e-15);
  EXPECT_NEAR(s.branch_probability(Coin::c0), 0.75, 1e-15);
  EXPECT_NEAR(s.branch_probability(Coin::c1), 0.25, 1e-15);
}

TEST(DenseEvolve, RejectsSmallLattice) {
  EXPECT_THROW(dense_evolve(up_config(), 3, 2), std::invalid_argument);
  ExperimentConfig shifted = up_config();
  shifted.start_position = 2;
  EXPECT_THROW(dense_evolve(shifted, 2, 3), std::invalid_argument);
  EXPECT_NO_THROW(dense_evolve(shifted, 1, 3));
}

TEST(ReducedEntropy, WorkedValues) {
  EXPECT_NEAR(reduced_entropy(dense_evolve(up_config(), 1, 3), Coin::c0), 0.0, 1e-12);
  EXPECT_NEAR(reduced_entropy(dense_evolve(up_config(), 2, 3), Coin::c0), 1.0, 1e-12);
  const double h3 = std::log2(3.0) - 1.0 / 3.0;
  EXPECT_NEAR(reduced_entropy(dense_evolve(up_config(), 3, 3), Coin::c0), h3, 1e-12);
  EXPECT_NEAR(h3, 1.2516, 5e-5);
  EXPECT_THROW(reduced_entropy(dense_evolve(up_config(), 0, 3), Coin::c1), EmptyBranchError);
}

TEST(ReducedEntropy, EigenvaluesSumToOne) {
  const auto ev = reduced_density_eigenvalues(dense_evolve(up_config(), 3, 3), Coin::c0);
  ASSERT_EQ(ev.size(), 7u);
  EXPECT_NEAR(ev[0], 4.0 / 6.0, 1e-14);
  EXPECT_NEAR(ev[1], 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(ev[2], 1.0 / 6.0, 1e-14);
  for (std::size_t i = 3; i < ev.size(); ++i) EXPECT_EQ(ev[i], 0.0);
}

TEST(PathSum, WorkedValues) {
  EXPECT_NEAR(std::abs(path_sum_amplitude(kUp, 0, Coin::c0, 0) - 1.0), 0.0, 1e-16);
  EXPECT_EQ(path_sum_amplitude(kUp, 0, Coin::c1, 0), Complex{});
  EXPECT_NEAR(std::abs(path_sum_amplitude(kUp, 0, Coin::c1, 2) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(path_sum_amplitude(kUp, -2, Coin::c1, 2) + 0.5), 0.0, 1e-15);
  EXPECT_EQ(path_sum_amplitude(kUp, 1, Coin::c0, 2), Complex{});
  EXPECT_NEAR(std::abs(path_sum_amplitude(kUp, 5, Coin::c0, 1, hadamard(), 4) - kH), 0.0, 1e-16);
}

TEST(PathSum, RejectsDepth) {
  EXPECT_THROW(path_sum_amplitude(kUp, 0, Coin::c0, kMaxPathSumSteps + 1), std::invalid_argument);
  EXPECT_THROW(path_sum_amplitude(kUp, 0, Coin::c0, -1), std::invalid_argument);
}

// The two oracles agree with each other on the diagonal.
TEST(Oracles, DenseMatchesPathSum) {
  const CoinSpinor coin{Complex{0.6}, Complex{0.0, -0.8}};
  const ExperimentConfig config{coin, 0, 9, hadamard()};
  for (std::int64_t t = 0; t <= 9; ++t) {
    const DenseTensorState s = dense_evolve(config, t, 9);
    for (std::int64_t x = -9; x <= 9; ++x) {
      for (Coin c : kCoins) {
        EXPECT_NEAR(std::abs(s.amplitude(c, x, x) - path_sum_amplitude(coin, x, c, t)), 0.0, 1e-14);
      }
    }
  }
}

}  // namespace
