#include "steerkit/verification.hpp"

#include <cmath>

#include "steerkit/entanglement.hpp"
#include "steerkit/families.hpp"
#include "steerkit/quantum_state.hpp"
#include "steerkit/random.hpp"
#include "steerkit/steering.hpp"

namespace steerkit {

namespace {

SingularSpectrum spectrum_of(const BellDiagonalParams& params) {
    return {std::abs(params.c1), std::abs(params.c2), std::abs(params.c3)};
}

template <typename CaseFn>
SuiteResult run_suite(const std::string& name, int cases, double tolerance,
                      CaseFn&& case_fn) {
    SuiteResult result;
    result.name = name;
    result.cases = cases;
    result.tolerance = tolerance;
    result.passed = true;
    for (int i = 0; i < cases; ++i) {
        const auto [residual, detail] = case_fn(i);
        result.max_residual = std::max(result.max_residual, residual);
        if (residual > tolerance && result.passed) {
            result.passed = false;
            result.detail = "case " + std::to_string(i) + ": " + detail +
                            " (residual " + std::to_string(residual) + ")";
        }
    }
    return result;
}

using CaseOutcome = std::pair<double, std::string>;

} // namespace

std::vector<SuiteResult> run_verification(const VerificationConfig& config) {
    std::vector<SuiteResult> results;
    const double fault_factor =
        config.fault == FaultInjection::ScalingOffset ? 1.0 + 1e-3 : 1.0;

    results.push_back(run_suite(
        "scaling", config.scaling_cases, 1e-8, [&](int i) -> CaseOutcome {
            RngStream rng = RngStream::substream(config.seed, 0x1000 + i);
            const SingularSpectrum spec = spectrum_of(random_bell_diagonal(rng));
            const double gamma = rng.uniform();
            const SingularSpectrum scaled{gamma * spec.t1(), gamma * spec.t2(),
                                          gamma * spec.t3()};
            const double f = max_violation(spec).f_value;
            const double f_scaled = max_violation(scaled).f_value * fault_factor;
            return {std::abs(f_scaled - gamma * f), "F(gamma L) != gamma F(L)"};
        }));

    results.push_back(run_suite(
        "unitary-invariance", config.unitary_cases, 1e-7, [&](int i) -> CaseOutcome {
            RngStream rng = RngStream::substream(config.seed, 0x2000 + i);
            const DensityMatrix rho = bell_diagonal_from_t(random_bell_diagonal(rng));
            const DensityMatrix rotated =
                apply_local_unitary(rho, rng.random_su2(), rng.random_su2());
            const SingularSpectrum before = singular_spectrum(correlation_matrix(rho));
            const SingularSpectrum after =
                singular_spectrum(correlation_matrix(rotated));
            const double spectrum_drift = std::max(
                {std::abs(before.t1() - after.t1()), std::abs(before.t2() - after.t2()),
                 std::abs(before.t3() - after.t3())});
            if (spectrum_drift > 1e-10)
                return {1.0, "singular spectrum not preserved"};
            const double f_before = steering_verdict(rho).f_value;
            const double f_after = steering_verdict(rotated).f_value;
            return {std::abs(f_before - f_after), "F changed under local unitaries"};
        }));

    results.push_back(run_suite(
        "closed-form-vs-quadrature", config.closed_form_cases, 1e-7,
        [&](int i) -> CaseOutcome {
            RngStream rng = RngStream::substream(config.seed, 0x3000 + i);
            const double a = rng.uniform();
            const double c = rng.uniform();
            const double closed = axial_closed_form(a, c);
            const SingularSpectrum spec{a, a, c};
            double quad;
            try {
                quad = max_violation_quadrature(spec, 1e-9).f_value;
            } catch (const ConvergenceError& e) {
                // spectra with a ~ 0 refine slowly; the best estimate still
                // certifies the 1e-7 comparison when its error is far below
                if (e.best().estimated_error > 2e-8)
                    return {1.0, "quadrature failed to certify the comparison"};
                quad = e.best().value;
            }
            return {std::abs(closed - quad), "axial closed form disagrees with "
                                             "quadrature"};
        }));

    results.push_back(run_suite(
        "separable-bound", config.separable_cases, 0.0, [&](int i) -> CaseOutcome {
            RngStream rng = RngStream::substream(config.seed, 0x4000 + i);
            const int n_terms = 1 + static_cast<int>(rng.uniform() * 6.0);
            const auto [mixture, rho] = random_separable_t(n_terms, rng);
            const double f = steering_verdict(rho, 1e-7).f_value; // bulk target
            // residual > 0 only when F exceeds 1/2 beyond the quadrature slack
            return {std::max(0.0, f - 0.5 - 1e-6), "separable state violates the "
                                                   "steering bound"};
        }));

    results.push_back(run_suite(
        "shortcut-vs-wootters", config.shortcut_cases, 1e-8, [&](int i) -> CaseOutcome {
            RngStream rng = RngStream::substream(config.seed, 0x5000 + i);
            const DensityMatrix rho = bell_diagonal_from_t(random_bell_diagonal(rng));
            const double shortcut = concurrence(rho).concurrence;
            const double general = concurrence_wootters(rho).concurrence;
            return {std::abs(shortcut - general), "T-state shortcut disagrees with "
                                                  "the spin-flip formula"};
        }));

    return results;
}

} // namespace steerkit
