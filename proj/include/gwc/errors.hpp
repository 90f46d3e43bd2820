#pragma once

#include <stdexcept>
#include <string>

namespace gwc {

/// Error codes carried by GwcError. The CLI maps them to exit codes:
/// input/validation errors -> 2, internal invariant violations -> 3.
enum class Errc {
  // exact fields
  NotMonic,
  Reducible,
  ZeroFunction,
  ZeroDivision,
  // multivariate polynomials
  RingMismatch,
  IndexOutOfRange,
  ZeroIdeal,
  NotZeroDimensional,
  // local algebra
  NotIsolated,
  NotAtOrigin,
  SmoothPoint,
  ConstantTermPresent,
  ZeroElement,
  // GW arithmetic
  Degenerate,
  ZeroEntry,
  FieldMismatch,
  UnsupportedField,
  DegenerateTraceForm,
  // conductor evaluators
  NegativeGenus,
  ParityViolation,
  MuMismatch,
  NotSquarefree,
  SmoothnessCheckFailed,
  FactorizationInvalid,
  InsufficientGlobalData,
  InconsistentGlobalData,
  ValidationFailed,
  Precondition,
  // front end
  ParseError,
  SchemaError,
  Internal,
};

const char* errc_name(Errc c);

/// Internal violations get exit code 3 instead of 2.
bool errc_is_internal(Errc c);

class GwcError : public std::runtime_error {
 public:
  GwcError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw GwcError(code, what);
}

}  // namespace gwc
