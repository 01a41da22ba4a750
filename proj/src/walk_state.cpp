#include "qwalk/walk_state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/simd.hpp"

namespace qwalk {
namespace {

void check_lanes(const std::vector<double>& re0, const std::vector<double>& im0,
                 const std::vector<double>& re1, const std::vector<double>& im1) {
  const std::size_t n = re0.size();
  if (n == 0) throw std::invalid_argument("walk state needs at least one site");
  if (im0.size() != n || re1.size() != n || im1.size() != n) {
    throw std::invalid_argument("walk state lanes differ in length");
  }
  for (const auto* lane : {&re0, &im0, &re1, &im1}) {
    for (double v : *lane) {
      if (!std::isfinite(v)) throw std::invalid_argument("walk state amplitude is not finite");
    }
  }
}

void require_normalized(const CoinSpinor& coin) {
  if (!coin.is_normalized()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "coin state is not normalized: |amp0|^2 + |amp1|^2 = " << coin.norm_squared();
    throw NormalizationError(msg.str());
  }
}

}  // namespace

bool CoinSpinor::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

template <class Layout>
WalkState<Layout>::WalkState(std::int64_t step, std::int64_t first_position,
                             std::span<const CoinSpinor> sites)
    : step_(step), first_(first_position) {
  if (step < 0) throw std::invalid_argument("walk state step must be non-negative");
  lanes_.re0.reserve(sites.size());
  lanes_.im0.reserve(sites.size());
  lanes_.re1.reserve(sites.size());
  lanes_.im1.reserve(sites.size());
  for (const CoinSpinor& s : sites) {
    lanes_.re0.push_back(s.amp0.real());
    lanes_.im0.push_back(s.amp0.imag());
    lanes_.re1.push_back(s.amp1.real());
    lanes_.im1.push_back(s.amp1.imag());
  }
  check_lanes(lanes_.re0, lanes_.im0, lanes_.re1, lanes_.im1);
}

template <class Layout>
WalkState<Layout>::WalkState(std::int64_t step, std::int64_t first_position, Lanes lanes)
    : step_(step), first_(first_position), lanes_(std::move(lanes)) {
  if (step < 0) throw std::invalid_argument("walk state step must be non-negative");
  check_lanes(lanes_.re0, lanes_.im0, lanes_.re1, lanes_.im1);
}

template <class Layout>
Complex WalkState<Layout>::amplitude(std::int64_t x, Coin c) const {
  if (x < first_ || x > last_position()) return {};
  const auto k = static_cast<std::size_t>(x - first_);
  return c == Coin::c0 ? Complex{lanes_.re0[k], lanes_.im0[k]}
                       : Complex{lanes_.re1[k], lanes_.im1[k]};
}

template <class Layout>
CoinSpinor WalkState<Layout>::at(std::int64_t x) const {
  return {amplitude(x, Coin::c0), amplitude(x, Coin::c1)};
}

template <class Layout>
std::vector<CoinSpinor> WalkState<Layout>::sites() const {
  std::vector<CoinSpinor> out;
  out.reserve(width());
  for (std::size_t k = 0; k < width(); ++k) {
    out.push_back({{lanes_.re0[k], lanes_.im0[k]}, {lanes_.re1[k], lanes_.im1[k]}});
  }
  return out;
}

CorrelatedWalkState new_correlated_state(const CoinSpinor& coin, std::int64_t position) {
  require_normalized(coin);
  return CorrelatedWalkState(0, position, std::span<const CoinSpinor>(&coin, 1));
}

SingleWalkerState new_single_state(const CoinSpinor& coin, std::int64_t position) {
  require_normalized(coin);
  return SingleWalkerState(0, position, std::span<const CoinSpinor>(&coin, 1));
}

template <class Layout>
double norm(const WalkState<Layout>& state) {
  const auto& k = simd::kernels();
  const auto& l = state.lanes();
  return k.sum_abs2(l.re0.size(), l.re0.data(), l.im0.data()) +
         k.sum_abs2(l.re1.size(), l.re1.data(), l.im1.data());
}

namespace {

template <class Layout>
std::vector<double> site_probabilities(const WalkState<Layout>& state) {
  const auto& k = simd::kernels();
  const auto& l = state.lanes();
  const std::size_t n = state.width();
  std::vector<double> p0(n), p1(n);
  k.abs2(n, l.re0.data(), l.im0.data(), p0.data());
  k.abs2(n, l.re1.data(), l.im1.data(), p1.data());
  for (std::size_t i = 0; i < n; ++i) p0[i] += p1[i];
  return p0;
}

}  // namespace

template <class Layout>
std::map<std::int64_t, double> position_distribution(const WalkState<Layout>& state) {
  const std::vector<double> p = site_probabilities(state);
  std::map<std::int64_t, double> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) out.emplace(state.first_position() + static_cast<std::int64_t>(i), p[i]);
  }
  return out;
}

template <class Layout>
std::vector<std::int64_t> support(const WalkState<Layout>& state) {
  const std::vector<double> p = site_probabilities(state);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > kSupportEpsilon) out.push_back(state.first_position() + static_cast<std::int64_t>(i));
  }
  return out;
}

template class WalkState<CorrelatedLayout>;
template class WalkState<SingleWalkerLayout>;

template double norm(const CorrelatedWalkState&);
template double norm(const SingleWalkerState&);
template std::map<std::int64_t, double> position_distribution(const CorrelatedWalkState&);
template std::map<std::int64_t, double> position_distribution(const SingleWalkerState&);
template std::vector<std::int64_t> support(const CorrelatedWalkState&);
template std::vector<std::int64_t> support(const SingleWalkerState&);

}  // namespace qwalk
