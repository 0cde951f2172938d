#pragma once

#include <stdexcept>
#include <string>

namespace nakct {

enum class ErrorCode {
  InvalidKupisch,
  InvalidParameter,
  KindMismatch,
  NotACutPoint,
  NoArrow,
  InvalidSubcategory,
  ModuleNotInCategory,
  GroundSetTooLarge,
  ResolutionTooLong,
  FiniteGlobalDimension,
  NotInClassifiedCase,
  Internal,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidKupisch: return "InvalidKupisch";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotACutPoint: return "NotACutPoint";
    case ErrorCode::NoArrow: return "NoArrow";
    case ErrorCode::InvalidSubcategory: return "InvalidSubcategory";
    case ErrorCode::ModuleNotInCategory: return "ModuleNotInCategory";
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::ResolutionTooLong: return "ResolutionTooLong";
    case ErrorCode::FiniteGlobalDimension: return "FiniteGlobalDimension";
    case ErrorCode::NotInClassifiedCase: return "NotInClassifiedCase";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Capacity errors are reported separately from malformed input by the CLI.
inline bool is_capacity_error(ErrorCode c) {
  return c == ErrorCode::GroundSetTooLarge || c == ErrorCode::ResolutionTooLong;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nakct
