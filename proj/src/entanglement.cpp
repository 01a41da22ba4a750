#include "qwalk/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

SchmidtSpectrum SchmidtSpectrum::from_coefficients(std::span<const double> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("Schmidt spectrum needs at least one coefficient");
  std::vector<double> w;
  w.reserve(coefficients.size());
  double total = 0.0;
  for (double a : coefficients) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("Schmidt coefficients must be finite and non-negative");
    }
    w.push_back(a * a);
    total += a * a;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Schmidt coefficients are not normalized: sum alpha^2 = " << total;
    throw NormalizationError(msg.str());
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  return SchmidtSpectrum(std::move(w));
}

std::vector<double> SchmidtSpectrum::coefficients() const {
  std::vector<double> out(weights_.size());
  std::transform(weights_.begin(), weights_.end(), out.begin(), [](double w) { return std::sqrt(w); });
  return out;
}

SchmidtSpectrum schmidt_spectrum(const BranchState& branch) {
  std::vector<double> w = branch.weights();
  std::erase_if(w, [](double v) { return !(v > kSupportEpsilon); });
  std::sort(w.begin(), w.end(), std::greater<>());
  return SchmidtSpectrum(std::move(w));
}

double von_neumann_entropy(const SchmidtSpectrum& spectrum) {
  double s = 0.0;
  for (double w : spectrum.weights()) {
    if (w > 0.0) s -= w * std::log2(w);
  }
  // A single unit weight can come out as -0.0.
  return s > 0.0 ? s : 0.0;
}

double max_entanglement(std::int64_t step) {
  if (step < 1) throw std::invalid_argument("max_entanglement: step must be >= 1");
  return std::log2(static_cast<double>(step));
}

double support_entanglement_bound(const BranchState& branch) {
  const std::size_t d = branch.support().size();
  return d == 0 ? 0.0 : std::log2(static_cast<double>(d));
}

std::optional<double> entanglement_ratio(double entropy, std::int64_t step) {
  const double bound = max_entanglement(step);
  if (!(bound > 0.0)) return std::nullopt;
  return entropy / bound;
}

EntanglementRecord quantify(const BranchState& branch) {
  const SchmidtSpectrum spectrum = schmidt_spectrum(branch);
  EntanglementRecord rec;
  rec.entropy = von_neumann_entropy(spectrum);
  rec.max_entropy = max_entanglement(branch.step());
  rec.ratio = entanglement_ratio(rec.entropy, branch.step());
  rec.support_size = spectrum.rank();
  return rec;
}

}  // namespace qwalk
