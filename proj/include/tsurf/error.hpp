#pragma once

#include <stdexcept>
#include <string>

namespace tsurf {

enum class ErrorCode {
  DivisionByZero,
  NotReal,
  UnpairedEdge,
  NonParallelPair,
  SameSidePair,
  SelfIntersectingPolygon,
  Disconnected,
  AngleNotMultipleOf2Pi,
  GenusMismatch,
  SegmentNotInterior,
  EndpointsNotOnBoundary,
  SameFace,
  NonSimpleResult,
  GroupTooLarge,
  PointNotOnSurface,
  AngleNotRational,
  StartOutsidePolygon,
  StartNotOnSurface,
  Overflow,
  CornerHit,
  InsufficientRange,
  BudgetExceeded,
  SyntaxError,
  InternalError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::UnpairedEdge: return "UnpairedEdge";
    case ErrorCode::NonParallelPair: return "NonParallelPair";
    case ErrorCode::SameSidePair: return "SameSidePair";
    case ErrorCode::SelfIntersectingPolygon: return "SelfIntersectingPolygon";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::AngleNotMultipleOf2Pi: return "AngleNotMultipleOf2Pi";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::SegmentNotInterior: return "SegmentNotInterior";
    case ErrorCode::EndpointsNotOnBoundary: return "EndpointsNotOnBoundary";
    case ErrorCode::SameFace: return "SameFace";
    case ErrorCode::NonSimpleResult: return "NonSimpleResult";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::PointNotOnSurface: return "PointNotOnSurface";
    case ErrorCode::AngleNotRational: return "AngleNotRational";
    case ErrorCode::StartOutsidePolygon: return "StartOutsidePolygon";
    case ErrorCode::StartNotOnSurface: return "StartNotOnSurface";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CornerHit: return "CornerHit";
    case ErrorCode::InsufficientRange: return "InsufficientRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Internal consistency guard; trips only on library bugs.
inline void require_internal(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InternalError, what);
}

}  // namespace tsurf
