#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace steerkit {

/// Test-only fault hook: lets callers prove the suites can fail.
enum class FaultInjection {
    None,
    ScalingOffset, // perturbs the scaling comparison by 1e-3
};

struct VerificationConfig {
    std::uint64_t seed = 1;
    int scaling_cases = 500;
    int unitary_cases = 200;
    int closed_form_cases = 200;
    int separable_cases = 200;
    int shortcut_cases = 500;
    FaultInjection fault = FaultInjection::None;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    int cases = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::string detail; // first failure, empty when passed
};

/// Runs the five property suites — scaling, local-unitary invariance,
/// closed-form vs quadrature, separable bound, shortcut vs Wootters — with
/// streams derived from the configured seed.
std::vector<SuiteResult> run_verification(const VerificationConfig& config);

} // namespace steerkit
