#pragma once

#include <stdexcept>

namespace rpolylog {

// Error hierarchy shared by all modules.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's stated domain.
struct DomainError : Error {
  using Error::Error;
};

// z on the excluded ray [1, inf).
struct BranchCutError : DomainError {
  using DomainError::DomainError;
};

// Working precision cannot support the requested computation.
struct PrecisionError : Error {
  using Error::Error;
};

// No admissible rational found for a fitted coefficient.
struct ReconstructionError : Error {
  using Error::Error;
};

// A coefficient denominator has a prime factor above the allowed bound.
struct SmoothnessError : Error {
  using Error::Error;
};

// Phase unwrapping became ambiguous.
struct UnwrapError : Error {
  using Error::Error;
};

// Degenerate derivative data (both values zero).
struct DegenerateError : Error {
  using Error::Error;
};

// Two evaluation methods disagree beyond their combined error bounds.
struct CrosscheckError : Error {
  using Error::Error;
};

// Malformed table file or report.
struct IOError : Error {
  using Error::Error;
};

}  // namespace rpolylog
