#pragma once

#include <stdexcept>
#include <string>

namespace beacon {

enum class ErrorCode {
  ParseError,
  InvalidPolygon,
  BallOutsidePolygon,
  PointOutsidePolygon,
  ModelViolation,
  NotGridOrthogonal,
  NotIncident,
  BeaconOutsideSpace,
  NotNearOrthogonal,
  PerturbationFailed,
  EdgeSetMismatch,
  MissingCorrespondence,
  GenerationFailed,
  PathViolatesMode,
  InvalidArgument,
  NotFreeMode,
  CaptureFailed,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace beacon
