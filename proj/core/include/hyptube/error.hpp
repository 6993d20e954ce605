#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyptube {

enum class ErrorKind {
  InvalidArgument,
  DegenerateMatrix,
  DegenerateGeodesic,
  NotLoxodromic,
  SharedEndpoint,
  IntersectingLines,
  PointOnCircle,
  GuardBandSwallowedPoint,
  SyntaxError,
  BadDeterminant,
  UnknownGenerator,
  DuplicateName,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the kind
// lets callers branch without a class hierarchy.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::DegenerateGeodesic: return "DegenerateGeodesic";
    case ErrorKind::NotLoxodromic: return "NotLoxodromic";
    case ErrorKind::SharedEndpoint: return "SharedEndpoint";
    case ErrorKind::IntersectingLines: return "IntersectingLines";
    case ErrorKind::PointOnCircle: return "PointOnCircle";
    case ErrorKind::GuardBandSwallowedPoint: return "GuardBandSwallowedPoint";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadDeterminant: return "BadDeterminant";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace hyptube
