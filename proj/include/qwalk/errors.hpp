#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Coin spinor or state whose squared norm is not 1.
class NormalizationError : public std::invalid_argument {
 public:
  explicit NormalizationError(const std::string& what) : std::invalid_argument(what) {}
};

class NonUnitaryError : public std::invalid_argument {
 public:
  explicit NonUnitaryError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a coin outcome has (numerically) zero probability, so its
// post-measurement state and entanglement are undefined.
class EmptyBranchError : public std::domain_error {
 public:
  explicit EmptyBranchError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qwalk
