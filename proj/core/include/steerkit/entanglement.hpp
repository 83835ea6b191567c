#pragma once

#include <Eigen/Dense>
#include <utility>

#include "steerkit/quantum_state.hpp"

namespace steerkit {

enum class ConcurrenceMethod {
    TStateShortcut,  // E = max(0, 2 lambda_max(rho) - 1), valid for T states
    WoottersGeneral, // spin-flip formula via eigenvalues of rho * rho~
};

const char* to_string(ConcurrenceMethod method);

struct EntanglementReport {
    double concurrence = 0.0;
    double lambda_max = 0.0; // largest eigenvalue of rho
    ConcurrenceMethod method = ConcurrenceMethod::WoottersGeneral;
};

/// Concurrence of a two-qubit state. T states (within 1e-8) take the
/// shortcut E = max(0, 2 lambda_max - 1); anything else goes through the
/// general spin-flip formula.
EntanglementReport concurrence(const DensityMatrix& rho);

/// General spin-flip concurrence regardless of T-ness: square roots of the
/// eigenvalues of rho * rho~ descending, E = max(0, l1 - l2 - l3 - l4).
EntanglementReport concurrence_wootters(const DensityMatrix& rho);

/// Pure-state concurrence |<psi|psi~>| with psi~ = (sigma_y x sigma_y) psi*.
/// Requires |psi| = 1 within 1e-10.
double concurrence_pure(const Eigen::Vector4cd& psi);

/// Bounds on the maximum violation reachable at concurrence e:
///   lower = (1 + 2e)/3,  upper = closed form for the spectrum (e, e, 1).
/// e = 0 returns (0, 1/2) — the separable band; e = 1 returns (1, 1).
std::pair<double, double> ef_band(double e);

} // namespace steerkit
