#pragma once

#include <stdexcept>
#include <string>

namespace eitangle {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched grid shapes or cutoffs.
struct DimensionError : Error {
  using Error::Error;
};

// Input outside the mathematical domain of an operation (zero detuning,
// zero-norm state, odd cat at beta = 0, ...).
struct DomainError : Error {
  using Error::Error;
};

// Caller violated a documented precondition, e.g. passed a non-normalized
// state where a normalized one is required.
struct ContractError : Error {
  using Error::Error;
};

// Parameters outside the physical regime an operation is defined for.
struct RegimeError : Error {
  using Error::Error;
};

// A computation would exceed a configured resource limit.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace eitangle
