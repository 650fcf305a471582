#pragma once

#include <stdexcept>
#include <string>

namespace modcrown {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleError : Error { using Error::Error; };              // Gamma / kernel pole hit
struct DomainError : Error { using Error::Error; };            // argument outside contract
struct ConvergenceError : Error { using Error::Error; };       // series/iteration budget exhausted
struct UnclassifiedError : Error { using Error::Error; };      // oscillatory boundary case, refused
struct ShapeError : Error { using Error::Error; };             // mismatched vector/model shapes
struct KmsViolation : Error { using Error::Error; };           // KMS precondition failed
struct DivergentIntegral : Error { using Error::Error; };      // Laplace transform diverges
struct QuadratureError : Error { using Error::Error; };        // quadrature failed to settle
struct FitError : Error { using Error::Error; };               // regression residual too large
struct InconclusiveError : Error { using Error::Error; };      // dual-route verdicts unavailable
struct StripError : Error { using Error::Error; };             // continuation parameter outside strip
struct PathSingularity : Error { using Error::Error; };        // continuation path grazes a pole
struct UndefinedPairing : Error { using Error::Error; };       // distribution-distribution pairing
struct InfinityError : Error { using Error::Error; };          // boundary point mapped to infinity
struct WeightError : Error { using Error::Error; };            // representation weight not in {2,4,...}
struct OffShellError : Error { using Error::Error; };          // point not on the quadric
struct FormulaMismatch : Error { using Error::Error; };        // two defining formulas disagree
struct DegenerateError : Error { using Error::Error; };        // degenerate geometric configuration
struct NotEulerError : Error { using Error::Error; };          // element is not an Euler element
struct NotInPError : Error { using Error::Error; };            // element not in the -1 Cartan eigenspace
struct UnknownAlgebraError : Error { using Error::Error; };    // unsupported algebra tag

}  // namespace modcrown
