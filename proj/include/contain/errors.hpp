#pragma once

#include <stdexcept>
#include <string>

namespace contain {

enum class ErrorCode {
  kDimensionMismatch,
  kInvalidContainer,
  kInvalidArgument,
  kNumericalFailure,
  kBudgetExceeded,
  kMissingRepresentation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace contain
