#include "bennett/error.hpp"

namespace bennett {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonOrthogonalInput: return "non-orthogonal-input";
    case ErrorCode::DegeneratePrimal: return "degenerate-primal";
    case ErrorCode::OffQuadric: return "off-quadric";
    case ErrorCode::NonMonicDivisor: return "non-monic-divisor";
    case ErrorCode::CollinearPoses: return "collinear-poses";
    case ErrorCode::NoBennettMotion: return "no-bennett-motion";
    case ErrorCode::DegenerateNorm: return "degenerate-norm";
    case ErrorCode::NonQuadratic: return "non-quadratic";
    case ErrorCode::PureTranslationFactor: return "pure-translation-factor";
    case ErrorCode::CoincidentAxes: return "coincident-axes";
    case ErrorCode::NotBennett: return "not-bennett";
    case ErrorCode::InvalidSpec: return "invalid-spec";
    case ErrorCode::TwistInfeasible: return "twist-infeasible";
    case ErrorCode::ClosureFailure: return "closure-failure";
    case ErrorCode::UnreachableStop: return "unreachable-stop";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::SamplesTooFew: return "samples-too-few";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::Io: return "io-error";
    case ErrorCode::SchemaViolation: return "schema-violation";
  }
  return "unknown";
}

}  // namespace bennett
