#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qwalk/simd.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

// 2x2 unitary acting on the coin. Rows index the output basis state,
// columns the input one. Construction rejects non-unitary matrices, so
// every CoinOperator in circulation is unitary within 1e-12.
class CoinOperator {
 public:
  // Row-major {m00, m01, m10, m11}. Throws NonUnitaryError.
  explicit CoinOperator(const std::array<Complex, 4>& entries);

  Complex operator()(int row, int col) const { return entries_[row * 2 + col]; }
  const std::array<Complex, 4>& entries() const { return entries_; }

  CoinSpinor apply(const CoinSpinor& s) const;

  // Largest elementwise deviation of U^dagger U from the identity.
  double unitarity_error() const;

  simd::CoinEntries kernel_entries() const;

  friend CoinOperator operator*(const CoinOperator& a, const CoinOperator& b);
  friend bool operator==(const CoinOperator&, const CoinOperator&) = default;

 private:
  std::array<Complex, 4> entries_;
};

inline constexpr double kUnitarityTolerance = 1e-12;

// (1/sqrt 2) [[1, 1], [1, -1]]
CoinOperator hadamard();

CoinOperator identity_coin();

// One application of S_ent (C (x) I): the coin mixes the amplitudes at each
// site, then the coin-0 component moves both walkers to x + 1 and the
// coin-1 component moves both to x - 1.
CorrelatedWalkState step(const CorrelatedWalkState& state, const CoinOperator& coin);

// Same update for a single walker, S (C (x) I).
SingleWalkerState step_single(const SingleWalkerState& state, const CoinOperator& coin);

// Snapshots U^t |initial> for t = 0..n. Throws std::invalid_argument if n < 0.
std::vector<CorrelatedWalkState> evolve(const CorrelatedWalkState& initial,
                                        const CoinOperator& coin, std::int64_t n);

// U^n |initial> for the single-walker walk, without keeping snapshots.
SingleWalkerState evolve_single(const SingleWalkerState& initial, const CoinOperator& coin,
                                std::int64_t n);

}  // namespace qwalk
