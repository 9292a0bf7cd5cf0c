#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace patchkit {

enum class ErrorKind {
  InvalidInput,
  AllZero,
  OutsideDomain,
  MissingControlPoints,
  TooFewSamples,
  DegenerateHull,
  UnsupportedDimension,
  NonIntegerExponent,
  NonPositiveArgument,
  NonLatticePoints,
  PoleAtArgument,
  NotInHull,
  NotConverged,
  NumericalUnderflow,
  SamplingFailure,
  WrongDimension,
  DimensionMismatch,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the IPF solver when the moment mismatch is still above tolerance
/// after the iteration budget is spent.
class NotConvergedError : public Error {
 public:
  NotConvergedError(std::size_t iterations, double residual);

  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

}  // namespace patchkit
