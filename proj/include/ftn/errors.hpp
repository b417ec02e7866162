#pragma once

#include <stdexcept>
#include <string>

namespace ftn {

// Exit codes shared by the command-line tools.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalidConfig = 2,
  kExitIllConditioned = 3,
  kExitNumericFailure = 4,
};

/// A matrix is too close to singular for the requested operation.
/// Carries the offending eigenvalue so callers can report the regime
/// (e.g. (1+beta)*rho < 1) that produced it.
class IllConditionedError : public std::runtime_error {
 public:
  IllConditionedError(const std::string& what, double offending_eigenvalue)
      : std::runtime_error(what), offending_eigenvalue_(offending_eigenvalue) {}
  double offending_eigenvalue() const noexcept { return offending_eigenvalue_; }

 private:
  double offending_eigenvalue_;
};

/// An iterative numeric routine stopped before reaching its tolerance.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace ftn
