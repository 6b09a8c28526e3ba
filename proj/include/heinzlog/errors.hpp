#ifndef HEINZLOG_ERRORS_HPP
#define HEINZLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heinzlog {

// Nonpositive scalar argument to a mean or weight.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Mean, kernel or norm parameter outside its admissible range.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input is not Hermitian, or not strictly positive definite.
struct NotPositiveError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameters violate the hypothesis of the inequality being checked.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A runtime accuracy contract (e.g. eigendecomposition residual) failed.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace heinzlog

#endif  // HEINZLOG_ERRORS_HPP
