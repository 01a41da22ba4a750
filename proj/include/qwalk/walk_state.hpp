#pragma once

// Quantum-walk states on the integer line.
//
// Both state types keep the coin-0 and coin-1 amplitudes over a contiguous
// window of positions in structure-of-arrays form (separate real and
// imaginary lanes per coin), which is the layout the SIMD kernels consume.
// Positions outside the window have amplitude zero.
//
// A CorrelatedWalkState encodes sum_x a0(x)|0>_c|x,x> + a1(x)|1>_c|x,x>:
// the two walkers always share a position, so off-diagonal two-walker kets
// cannot be represented at all. A SingleWalkerState encodes
// sum_x a0(x)|0>_c|x> + a1(x)|1>_c|x>; the storage is identical and the
// distinct type only keeps the two walks from being mixed up.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

// Coin basis label; also the label of a coin measurement outcome.
enum class Coin : std::uint8_t { c0 = 0, c1 = 1 };

inline constexpr std::array<Coin, 2> kCoins{Coin::c0, Coin::c1};

// Probability mass below which a position counts as unoccupied.
inline constexpr double kSupportEpsilon = 1e-14;

// Allowed deviation of a squared norm from 1.
inline constexpr double kNormTolerance = 1e-12;

struct CoinSpinor {
  Complex amp0{};
  Complex amp1{};

  Complex operator[](Coin c) const { return c == Coin::c0 ? amp0 : amp1; }
  double norm_squared() const { return std::norm(amp0) + std::norm(amp1); }
  bool is_normalized(double tol = kNormTolerance) const;

  friend bool operator==(const CoinSpinor&, const CoinSpinor&) = default;
};

struct CorrelatedLayout {};
struct SingleWalkerLayout {};

template <class Layout>
class WalkState {
 public:
  // Real and imaginary lanes for coin 0 and coin 1, all of equal length.
  struct Lanes {
    std::vector<double> re0, im0, re1, im1;

    friend bool operator==(const Lanes&, const Lanes&) = default;
  };

  // Builds a state from explicit site amplitudes; sites[k] is the spinor at
  // position first_position + k. Throws std::invalid_argument on an empty
  // window or non-finite amplitudes. Normalization is not enforced here.
  WalkState(std::int64_t step, std::int64_t first_position, std::span<const CoinSpinor> sites);

  WalkState(std::int64_t step, std::int64_t first_position, Lanes lanes);

  std::int64_t step() const { return step_; }
  std::int64_t first_position() const { return first_; }
  std::int64_t last_position() const { return first_ + static_cast<std::int64_t>(width()) - 1; }
  std::size_t width() const { return lanes_.re0.size(); }

  Complex amplitude(std::int64_t x, Coin c) const;
  CoinSpinor at(std::int64_t x) const;

  std::span<const double> re(Coin c) const { return c == Coin::c0 ? lanes_.re0 : lanes_.re1; }
  std::span<const double> im(Coin c) const { return c == Coin::c0 ? lanes_.im0 : lanes_.im1; }

  const Lanes& lanes() const { return lanes_; }
  std::vector<CoinSpinor> sites() const;

  friend bool operator==(const WalkState&, const WalkState&) = default;

 private:
  std::int64_t step_;
  std::int64_t first_;
  Lanes lanes_;
};

using CorrelatedWalkState = WalkState<CorrelatedLayout>;
using SingleWalkerState = WalkState<SingleWalkerLayout>;

// |coin> (x) |position, position>. Throws NormalizationError unless
// |amp0|^2 + |amp1|^2 = 1 within kNormTolerance.
CorrelatedWalkState new_correlated_state(const CoinSpinor& coin, std::int64_t position);

// |coin> (x) |position>, same validation.
SingleWalkerState new_single_state(const CoinSpinor& coin, std::int64_t position);

template <class Layout>
double norm(const WalkState<Layout>& state);

// P(x) = |a0(x)|^2 + |a1(x)|^2 for every position with P(x) > 0.
template <class Layout>
std::map<std::int64_t, double> position_distribution(const WalkState<Layout>& state);

// Ascending positions with P(x) > kSupportEpsilon.
template <class Layout>
std::vector<std::int64_t> support(const WalkState<Layout>& state);

}  // namespace qwalk
