#pragma once

#include <stdexcept>
#include <string>

namespace twideal {

enum class ErrorCode {
  Precondition,
  Parse,
  ResourceCap,
  ImproperIntersection,
  Verification,
  NotClassified,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::ResourceCap: return "resource-cap";
    case ErrorCode::ImproperIntersection: return "improper-intersection";
    case ErrorCode::Verification: return "verification";
    case ErrorCode::NotClassified: return "not-classified";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twideal
