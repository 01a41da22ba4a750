#include "qwalk/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

double unitarity_error_of(const std::array<Complex, 4>& m) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex acc{};
      for (int k = 0; k < 2; ++k) acc += std::conj(m[k * 2 + i]) * m[k * 2 + j];
      const Complex target = i == j ? Complex{1.0, 0.0} : Complex{};
      worst = std::max(worst, std::abs(acc - target));
    }
  }
  return worst;
}

template <class Layout>
WalkState<Layout> advance(const WalkState<Layout>& state, const CoinOperator& coin) {
  const std::size_t n = state.width();
  const auto& in = state.lanes();
  typename WalkState<Layout>::Lanes out{std::vector<double>(n + 2), std::vector<double>(n + 2),
                                        std::vector<double>(n + 2), std::vector<double>(n + 2)};
  const double* const src[4] = {in.re0.data(), in.im0.data(), in.re1.data(), in.im1.data()};
  double* const dst[4] = {out.re0.data(), out.im0.data(), out.re1.data(), out.im1.data()};
  simd::kernels().coin_shift(n, src, coin.kernel_entries(), dst);
  return WalkState<Layout>(state.step() + 1, state.first_position() - 1, std::move(out));
}

}  // namespace

CoinOperator::CoinOperator(const std::array<Complex, 4>& entries) : entries_(entries) {
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonUnitaryError("coin operator has non-finite entries");
    }
  }
  const double err = unitarity_error_of(entries_);
  if (err > kUnitarityTolerance) {
    std::ostringstream msg;
    msg << "coin operator is not unitary (max |U^dagger U - I| = " << err << ")";
    throw NonUnitaryError(msg.str());
  }
}

CoinSpinor CoinOperator::apply(const CoinSpinor& s) const {
  return {entries_[0] * s.amp0 + entries_[1] * s.amp1, entries_[2] * s.amp0 + entries_[3] * s.amp1};
}

double CoinOperator::unitarity_error() const { return unitarity_error_of(entries_); }

simd::CoinEntries CoinOperator::kernel_entries() const {
  simd::CoinEntries out{};
  for (std::size_t k = 0; k < 4; ++k) {
    out[2 * k] = entries_[k].real();
    out[2 * k + 1] = entries_[k].imag();
  }
  return out;
}

CoinOperator operator*(const CoinOperator& a, const CoinOperator& b) {
  std::array<Complex, 4> m{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m[i * 2 + j] = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  }
  return CoinOperator(m);
}

CoinOperator hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return CoinOperator({Complex{s}, Complex{s}, Complex{s}, Complex{-s}});
}

CoinOperator identity_coin() { return CoinOperator({Complex{1.0}, Complex{}, Complex{}, Complex{1.0}}); }

CorrelatedWalkState step(const CorrelatedWalkState& state, const CoinOperator& coin) {
  return advance(state, coin);
}

SingleWalkerState step_single(const SingleWalkerState& state, const CoinOperator& coin) {
  return advance(state, coin);
}

std::vector<CorrelatedWalkState> evolve(const CorrelatedWalkState& initial,
                                        const CoinOperator& coin, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("evolve: step count must be non-negative");
  std::vector<CorrelatedWalkState> snapshots;
  snapshots.reserve(static_cast<std::size_t>(n) + 1);
  snapshots.push_back(initial);
  for (std::int64_t t = 0; t < n; ++t) snapshots.push_back(step(snapshots.back(), coin));
  return snapshots;
}

SingleWalkerState evolve_single(const SingleWalkerState& initial, const CoinOperator& coin,
                                std::int64_t n) {
  if (n < 0) throw std::invalid_argument("evolve_single: step count must be non-negative");
  SingleWalkerState state = initial;
  for (std::int64_t t = 0; t < n; ++t) state = step_single(state, coin);
  return state;
}

}  // namespace qwalk
