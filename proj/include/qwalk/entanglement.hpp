#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/measurement.hpp"

namespace qwalk {

// Schmidt coefficients alpha_i of a bipartite pure state, stored as the
// weights alpha_i^2 in descending order.
class SchmidtSpectrum {
 public:
  // Validates non-negative coefficients with sum alpha_i^2 = 1 within
  // kNormTolerance; sorts descending. Throws NormalizationError or
  // std::invalid_argument (empty / negative input).
  static SchmidtSpectrum from_coefficients(std::span<const double> coefficients);

  std::size_t rank() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  std::vector<double> coefficients() const;

 private:
  friend SchmidtSpectrum schmidt_spectrum(const BranchState&);
  explicit SchmidtSpectrum(std::vector<double> weights) : weights_(std::move(weights)) {}

  std::vector<double> weights_;
};

// A diagonal state sum_x b(x)|x,x> is already in Schmidt form, so the
// coefficients are |b(x)|; weights at or below kSupportEpsilon are dropped.
SchmidtSpectrum schmidt_spectrum(const BranchState& branch);

// -sum alpha_i^2 log2 alpha_i^2, in bits.
double von_neumann_entropy(const SchmidtSpectrum& spectrum);

// log2(t): after t steps each coin branch spans at most t diagonal
// positions. Throws std::invalid_argument for t < 1.
double max_entanglement(std::int64_t step);

// log2 of the branch's actual support size.
double support_entanglement_bound(const BranchState& branch);

// entropy / max_entanglement(step), or nullopt when the bound is 0 (t = 1).
std::optional<double> entanglement_ratio(double entropy, std::int64_t step);

struct EntanglementRecord {
  double entropy = 0.0;
  double max_entropy = 0.0;
  std::optional<double> ratio;
  std::size_t support_size = 0;
};

EntanglementRecord quantify(const BranchState& branch);

}  // namespace qwalk
