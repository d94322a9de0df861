#pragma once

#include <stdexcept>
#include <string>

namespace hwext {

enum class ErrorCode {
  InvalidArgument,
  Dimension,
  Domain,
  NonFinite,
  Quadrature,
  InvalidJet,
  LemmaBound,
  ValidationRejected,
  MeasureBudget,
  Parse,
  Io,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type of the library; the code drives the C API status mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hwext
