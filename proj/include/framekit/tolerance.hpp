#pragma once

#include <optional>
#include <string_view>

namespace framekit {

/// Thresholds for the numerical kernels. Defaults suit double precision on
/// dimensions up to 64.
struct Tolerances {
  double rtol = 1e-9;    // relative residual
  double htol = 1e-10;   // Hermitian defect, relative to the operator norm
  double pdtol = 1e-10;  // smallest admissible eigenvalue of a positive definite input
  double rktol = 1e-10;  // numerical rank cut, relative to the largest singular value

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// Verdict thresholds for the verification catalog. Residuals are compared
/// after scaling by max(1, |f|^2); margins after scaling by max(1, |S|).
struct CheckTolerances {
  double residual = 1e-8;
  double margin = 1e-8;

  friend bool operator==(const CheckTolerances&, const CheckTolerances&) = default;
};

struct ToleranceConfig {
  Tolerances numeric;
  CheckTolerances check;

  friend bool operator==(const ToleranceConfig&, const ToleranceConfig&) = default;
};

/// Parses an override string of the form "key=value[,key=value...]" with keys
/// rtol, htol, pdtol, rktol, residual, margin. A bare number sets both
/// residual and margin. Throws FrameError(InvalidConfig) on malformed input.
ToleranceConfig parse_tolerance_override(std::string_view text, ToleranceConfig base = {});

/// Defaults, overridden by the FRAMEKIT_TOLERANCE environment variable when set.
ToleranceConfig tolerances_from_environment();

}  // namespace framekit
