#include "patchkit/errors.hpp"

#include <sstream>

namespace patchkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::MissingControlPoints: return "MissingControlPoints";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::DegenerateHull: return "DegenerateHull";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorKind::NonLatticePoints: return "NonLatticePoints";
    case ErrorKind::PoleAtArgument: return "PoleAtArgument";
    case ErrorKind::NotInHull: return "NotInHull";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::NumericalUnderflow: return "NumericalUnderflow";
    case ErrorKind::SamplingFailure: return "SamplingFailure";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

namespace {
std::string not_converged_message(std::size_t iterations, double residual) {
  std::ostringstream os;
  os << "moment mismatch " << residual << " after " << iterations << " iterations";
  return os.str();
}
}  // namespace

NotConvergedError::NotConvergedError(std::size_t iterations, double residual)
    : Error(ErrorKind::NotConverged, not_converged_message(iterations, residual)),
      iterations_(iterations),
      residual_(residual) {}

}  // namespace patchkit
