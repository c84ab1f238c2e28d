#pragma once

#include <stdexcept>
#include <string>

namespace quotdt {

enum class ErrorKind {
  kInvalidArgument,
  kRankMismatch,
  kZeroWeight,
  kNonzeroFixedPart,
  kParameterDependence,
  kNonIntegral,
  kSingularBasisMatrix,
  kNonUnitConstant,
};

const char* error_kind_name(ErrorKind kind);

/// Single exception type for the engine; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kRankMismatch: return "RankMismatch";
    case ErrorKind::kZeroWeight: return "ZeroWeight";
    case ErrorKind::kNonzeroFixedPart: return "NonzeroFixedPart";
    case ErrorKind::kParameterDependence: return "ParameterDependence";
    case ErrorKind::kNonIntegral: return "NonIntegral";
    case ErrorKind::kSingularBasisMatrix: return "SingularBasisMatrix";
    case ErrorKind::kNonUnitConstant: return "NonUnitConstant";
  }
  return "Unknown";
}

}  // namespace quotdt
