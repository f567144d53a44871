#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swingcmp {

enum class ErrorCode {
  MalformedFile,
  SchemaMismatch,
  NonFiniteValue,
  RaggedRows,
  DimensionMismatch,
  DegeneratePose,
  EmptyMatrix,
  PathShapeMismatch,
  EmptySignal,
  LengthMismatch,
  TooFewSamples,
  InvalidParams,
  InvalidWarp,
  IoFailure,
  SchemaVersionMismatch,
  BadRequest,
  NotFound,
  PortInUse,
  Internal,
};

// Stable machine-readable name, e.g. "NON_FINITE_VALUE".
std::string_view error_code_name(ErrorCode code);

// Process exit status for a failure of this kind: 2 validation, 3 I/O, 4 internal.
int exit_code_for(ErrorCode code);

// Every failure raised by the library. Context entries (file, frame, stage, ...)
// are accumulated as the error propagates outward.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::map<std::string, std::string> context = {})
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::map<std::string, std::string>& context() const noexcept { return context_; }

  // Keeps an existing value for the key so the innermost context wins.
  Error& with(const std::string& key, const std::string& value) {
    context_.try_emplace(key, value);
    return *this;
  }

 private:
  ErrorCode code_;
  std::map<std::string, std::string> context_;
};

}  // namespace swingcmp
