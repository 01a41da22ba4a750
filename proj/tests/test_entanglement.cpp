#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qwalk/entanglement.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/oracle.hpp"

namespace {

using namespace qwalk;

const CoinSpinor kUp{Complex{1.0}, Complex{}};

CorrelatedWalkState after(const CoinSpinor& coin, int t) {
  auto s = new_correlated_state(coin, 0);
  for (int k = 0; k < t; ++k) s = step(s, hadamard());
  return s;
}

double shannon_bits(const std::vector<double>& w) {
  double h = 0.0;
  for (double p : w) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

TEST(SchmidtSpectrum, WorkedBranches) {
  const auto one = schmidt_spectrum(post_measurement(after(kUp, 1), Coin::c0));
  ASSERT_EQ(one.rank(), 1u);
  EXPECT_NEAR(one.coefficients()[0], 1.0, 1e-15);

  const auto two = schmidt_spectrum(post_measurement(after(kUp, 2), Coin::c0));
  ASSERT_EQ(two.rank(), 2u);
  for (double a : two.coefficients()) EXPECT_NEAR(a, 1.0 / std::sqrt(2.0), 1e-15);

  const auto three = schmidt_spectrum(post_measurement(after(kUp, 3), Coin::c0));
  ASSERT_EQ(three.rank(), 3u);
  const auto a = three.coefficients();
  EXPECT_NEAR(a[0], 2.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(a[1], 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(a[2], 1.0 / std::sqrt(6.0), 1e-15);
}

TEST(SchmidtSpectrum, FromCoefficientsValidates) {
  const std::vector<double> ok{0.6, 0.8};
  const auto s = SchmidtSpectrum::from_coefficients(ok);
  EXPECT_NEAR(s.weights()[0], 0.64, 1e-15);
  EXPECT_THROW(SchmidtSpectrum::from_coefficients(std::vector<double>{0.6, 0.6}), NormalizationError);
  EXPECT_THROW(SchmidtSpectrum::from_coefficients(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(SchmidtSpectrum::from_coefficients(std::vector<double>{-0.6, 0.8}), std::invalid_argument);
}

TEST(VonNeumannEntropy, WorkedValues) {
  EXPECT_EQ(von_neumann_entropy(SchmidtSpectrum::from_coefficients(std::vector<double>{1.0})), 0.0);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(von_neumann_entropy(SchmidtSpectrum::from_coefficients(std::vector<double>{h, h})), 1.0, 1e-15);
  const double e3 = von_neumann_entropy(schmidt_spectrum(post_measurement(after(kUp, 3), Coin::c0)));
  EXPECT_NEAR(e3, 1.2516, 5e-5);
  EXPECT_NEAR(e3, std::log2(3.0) - 1.0 / 3.0, 1e-14);
}

TEST(VonNeumannEntropy, MaximalIffUniform) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (std::size_t k = 1; k <= 12; ++k) {
    const std::vector<double> flat(k, 1.0 / std::sqrt(static_cast<double>(k)));
    EXPECT_NEAR(von_neumann_entropy(SchmidtSpectrum::from_coefficients(flat)), std::log2(static_cast<double>(k)),
                1e-13);
    if (k == 1) continue;
    std::vector<double> w(k);
    for (double& x : w) x = u(rng);
    w[0] += 0.5;
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    std::vector<double> a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = std::sqrt(w[i] / total);
    EXPECT_LT(von_neumann_entropy(SchmidtSpectrum::from_coefficients(a)), std::log2(static_cast<double>(k)) - 1e-6);
  }
}

TEST(VonNeumannEntropy, InvariantUnderPermutation) {
  std::vector<double> a{0.1, 0.3, 0.5, 0.2, 0.4};
  double s = 0.0;
  for (double x : a) s += x * x;
  for (double& x : a) x /= std::sqrt(s);
  const double e = von_neumann_entropy(SchmidtSpectrum::from_coefficients(a));
  std::sort(a.begin(), a.end());
  do {
    ASSERT_EQ(von_neumann_entropy(SchmidtSpectrum::from_coefficients(a)), e);
  } while (std::next_permutation(a.begin(), a.end()));
}

TEST(VonNeumannEntropy, InvariantUnderGlobalPhase) {
  const CoinSpinor base{Complex{0.6}, Complex{0.0, 0.8}};
  for (double phi : {0.3, 1.7, -2.9}) {
    const Complex g = std::polar(1.0, phi);
    const CoinSpinor rotated{g * base.amp0, g * base.amp1};
    const auto a = after(base, 40), b = after(rotated, 40);
    for (Coin c : kCoins) {
      EXPECT_NEAR(quantify(post_measurement(a, c)).entropy, quantify(post_measurement(b, c)).entropy, 1e-12);
    }
  }
}

TEST(MaxEntanglement, WorkedValues) {
  EXPECT_EQ(max_entanglement(1), 0.0);
  EXPECT_EQ(max_entanglement(2), 1.0);
  EXPECT_NEAR(max_entanglement(3), 1.584962500721156, 1e-15);
  EXPECT_NEAR(max_entanglement(1000), 9.965784284662087, 1e-13);
  EXPECT_THROW(max_entanglement(0), std::invalid_argument);
}

TEST(EntanglementRatio, WorkedValues) {
  EXPECT_FALSE(entanglement_ratio(0.0, 1).has_value());
  EXPECT_NEAR(*entanglement_ratio(1.0, 2), 1.0, 1e-15);
  const auto r = quantify(post_measurement(after(kUp, 3), Coin::c0));
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_NEAR(*r.ratio, 0.7896, 1e-3);
  EXPECT_EQ(r.support_size, 3u);
  EXPECT_FALSE(quantify(post_measurement(after(kUp, 1), Coin::c0)).ratio.has_value());
}

TEST(EntanglementBounds, HoldOverLongWalk) {
  auto s = new_correlated_state({Complex{0.6}, Complex{0.0, 0.8}}, 0);
  for (std::int64_t t = 1; t <= 1000; ++t) {
    s = step(s, hadamard());
    for (Coin c : kCoins) {
      const BranchState b = post_measurement(s, c);
      const auto rec = quantify(b);
      ASSERT_GE(rec.entropy, 0.0);
      ASSERT_LE(rec.entropy, support_entanglement_bound(b) + 1e-12);
      ASSERT_LE(rec.entropy, max_entanglement(t) + 1e-12);
    }
  }
}

// The diagonal shortcut equals the full partial-trace entropy.
TEST(Entanglement, MatchesDenseOracle) {
  std::mt19937_64 rng(0xe17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    Complex a{g(rng), g(rng)}, b{g(rng), g(rng)};
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    const ExperimentConfig config{{a / n, b / n}, 0, 10, hadamard()};
    auto s = new_correlated_state(config.coin_init, 0);
    for (std::int64_t t = 1; t <= 10; ++t) {
      s = step(s, hadamard());
      const auto dense = oracle::dense_evolve(config, t, 10);
      for (Coin c : kCoins) {
        const BranchState branch = post_measurement(s, c);
        EXPECT_NEAR(quantify(branch).entropy, oracle::reduced_entropy(dense, c), 1e-10);
        EXPECT_NEAR(shannon_bits(branch.weights()), oracle::reduced_entropy(dense, c), 1e-10);
      }
    }
  }
}

}  // namespace
