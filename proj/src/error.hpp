#pragma once

#include <stdexcept>
#include <string>

namespace ghlab {

enum class ErrorCode {
  invalid_argument = 1,
  not_metric = 2,
  precondition = 3,
  budget_exceeded = 4,
  generation_failed = 5,
};

/// All fallible operations throw this; the C API maps code() to a status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ghlab
