#pragma once

#include <functional>
#include <string>
#include <vector>

#include "oqf/quadrature.hpp"

namespace oqf {

enum class VerifyLevel { fast, full };

/// Source of the weights under test; defaults to optimal_coefficients.
/// Tests substitute a deliberately broken provider to exercise the failure path.
using CoefficientProvider = std::function<OptimalCoefficients(const UniformGrid&, double)>;

struct VerifyCheck {
  std::string name;
  double max_deviation;
  double tolerance;
  bool passed;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const;
  std::vector<std::string> failures() const;
};

/// Runs the closed form against the oracle module: linear-system weights,
/// multiplier p0, first-moment identity, raw vs closed-form norm, discrete
/// operator identities and exactness on linear functions. `full` extends the
/// system sizes up to n = 256.
VerifyReport run_verification(VerifyLevel level, const CoefficientProvider& provider = {});

}  // namespace oqf
