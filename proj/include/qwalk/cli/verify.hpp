#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/experiment.hpp"

namespace qwalk::cli {

struct CheckResult {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::string render() const;
};

// Deliberately broken engines for exercising the checks themselves.
enum class Mutant {
  none,
  mirror_shift,    // walkers move the wrong way
  phase_kick,      // extra factor i on the coin-1 lane each step
  amplitude_leak,  // amplitudes shrink by 1e-9 per step
};

std::optional<Mutant> parse_mutant(std::string_view name);
Stepper stepper_for(Mutant mutant);

inline constexpr int kDefaultVerifyDepth = 10;
inline constexpr int kMaxVerifyDepth = 14;

// Analytic fixtures, dense and path-sum oracle agreement up to t = depth,
// and the long-run invariants (norm, parity, swap and mirror symmetry).
// Throws std::invalid_argument unless 1 <= depth <= kMaxVerifyDepth.
VerifyReport run_verification(int depth = kDefaultVerifyDepth, Mutant mutant = Mutant::none);

}  // namespace qwalk::cli
