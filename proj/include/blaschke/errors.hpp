#ifndef BLASCHKE_ERRORS_HPP
#define BLASCHKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blaschke {

// Error taxonomy mirrors the CLI exit codes: validation failures (bad
// parameters, violated invariants) exit 2, budget exhaustion exits 3,
// numerical failures exit 4.

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParameterOutOfRange : ValidationError {
  explicit ParameterOutOfRange(const std::string& msg) : ValidationError(msg) {}
};

// A constructive example's arithmetic side condition failed.
struct ConditionViolated : ValidationError {
  ConditionViolated(const std::string& which_, double residual_)
      : ValidationError("ConditionViolated: " + which_ +
                        " (residual " + std::to_string(residual_) + ")"),
        which(which_), residual(residual_) {}
  std::string which;
  double residual;
};

struct EmptyPortrait : ValidationError {
  explicit EmptyPortrait(const std::string& msg) : ValidationError(msg) {}
};

struct DegenerateFit : ValidationError {
  explicit DegenerateFit(const std::string& msg) : ValidationError(msg) {}
};

struct ZeroDerivative : ValidationError {
  explicit ZeroDerivative(const std::string& msg) : ValidationError(msg) {}
};

struct NonPositiveInput : ValidationError {
  explicit NonPositiveInput(const std::string& msg) : ValidationError(msg) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// No derivative order within the configured ceiling rose above the detection
// threshold at a critical point (degenerate or near-degenerate product).
struct MultiplicityOverflow : NumericalError {
  explicit MultiplicityOverflow(const std::string& msg) : NumericalError(msg) {}
};

struct GridTooCoarse : NumericalError {
  explicit GridTooCoarse(const std::string& msg) : NumericalError(msg) {}
};

struct TruncationTooShort : NumericalError {
  explicit TruncationTooShort(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace blaschke

#endif
