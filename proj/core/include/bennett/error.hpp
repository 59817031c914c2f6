#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bennett {

enum class ErrorCode {
  NonOrthogonalInput,
  DegeneratePrimal,
  OffQuadric,
  NonMonicDivisor,
  CollinearPoses,
  NoBennettMotion,
  DegenerateNorm,
  NonQuadratic,
  PureTranslationFactor,
  CoincidentAxes,
  NotBennett,
  InvalidSpec,
  TwistInfeasible,
  ClosureFailure,
  UnreachableStop,
  InvalidArgument,
  SamplesTooFew,
  InvalidConfig,
  Io,
  SchemaViolation,
};

// Stable kebab-case identifier used by the CLI and the HTTP service.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<double> detail = std::nullopt)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  ErrorCode code() const { return code_; }
  std::string_view code_name() const { return error_code_name(code_); }
  // Extra numeric payload, e.g. the nearest feasible fold angle.
  std::optional<double> detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::optional<double> detail_;
};

}  // namespace bennett
