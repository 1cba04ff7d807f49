#pragma once

#include <stdexcept>
#include <string>

namespace graphlab {

enum class ErrorCode {
  InvalidArgument,
  Validation,
  DomainMismatch,
  UnknownVertex,
  InfiniteResistance,
  SingularSystem,
  NotApplicable,
  Io,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphlab
