#pragma once

#include <stdexcept>
#include <string>

namespace fedisa {

enum class ErrorKind {
  invalid_architecture,
  dimension_mismatch,
  domain,
  empty_dataset,
  insufficient_data,
  unsupported_mode,
  io,
  schema,
  imputation,
  partition,
  staleness,
  protocol,
  config,
  calibration,
  input,
};

/// Single exception type for the whole library; `kind()` tells callers
/// which contract was violated without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace fedisa
