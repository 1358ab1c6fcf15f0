#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torickit {

enum class ErrorKind {
  InvalidInput,
  ZeroVector,
  DimensionMismatch,
  Unsupported,
  Unbounded,
  NonPrimitiveVertex,
  OriginNotInterior,
  NotConvex,
  DegeneratePolygon,
  EmptyScaffolding,
  NotNef,
  NonSimplicial,
  Torsion,
  Corank,
  NotHomogeneous,
  InvalidSubstitution,
  UnassignedParameter,
  NegativeFactorial,
  RelationSolve,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NonPrimitiveVertex: return "NonPrimitiveVertex";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::EmptyScaffolding: return "EmptyScaffolding";
    case ErrorKind::NotNef: return "NotNef";
    case ErrorKind::NonSimplicial: return "NonSimplicial";
    case ErrorKind::Torsion: return "Torsion";
    case ErrorKind::Corank: return "Corank";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::InvalidSubstitution: return "InvalidSubstitution";
    case ErrorKind::UnassignedParameter: return "UnassignedParameter";
    case ErrorKind::NegativeFactorial: return "NegativeFactorial";
    case ErrorKind::RelationSolve: return "RelationSolve";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace torickit
