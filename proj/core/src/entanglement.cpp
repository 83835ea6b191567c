#include "steerkit/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "steerkit/steering.hpp"

namespace steerkit {

namespace {

Eigen::Matrix4cd spin_flip_operator() {
    return kron(pauli(1), pauli(1)); // sigma_y x sigma_y, real entries +-1
}

double lambda_max_of(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix(),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

} // namespace

const char* to_string(ConcurrenceMethod method) {
    switch (method) {
        case ConcurrenceMethod::TStateShortcut: return "t-state-shortcut";
        case ConcurrenceMethod::WoottersGeneral: return "wootters-general";
    }
    return "unknown";
}

EntanglementReport concurrence(const DensityMatrix& rho) {
    ensure_valid(rho);
    if (!is_t_state(rho, 1e-8)) return concurrence_wootters(rho);
    EntanglementReport report;
    report.lambda_max = lambda_max_of(rho);
    report.concurrence = std::max(0.0, 2.0 * report.lambda_max - 1.0);
    report.method = ConcurrenceMethod::TStateShortcut;
    return report;
}

EntanglementReport concurrence_wootters(const DensityMatrix& rho) {
    ensure_valid(rho);
    const Eigen::Matrix4cd yy = spin_flip_operator();
    const Eigen::Matrix4cd flipped = yy * rho.matrix().conjugate() * yy;
    // rho * rho~ is similar to a PSD matrix; its eigenvalues are real >= 0.
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho.matrix() * flipped, false);
    Eigen::Vector4d roots;
    for (int i = 0; i < 4; ++i)
        roots(i) = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    std::sort(roots.data(), roots.data() + 4, std::greater<>());

    EntanglementReport report;
    report.lambda_max = lambda_max_of(rho);
    report.concurrence = std::max(0.0, roots(0) - roots(1) - roots(2) - roots(3));
    report.method = ConcurrenceMethod::WoottersGeneral;
    return report;
}

double concurrence_pure(const Eigen::Vector4cd& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw DomainError("concurrence_pure: state vector must be normalized");
    const Eigen::Vector4cd flipped = spin_flip_operator() * psi.conjugate();
    return std::abs(psi.dot(flipped)); // Eigen's dot conjugates the left factor
}

std::pair<double, double> ef_band(double e) {
    if (!(e >= 0.0 && e <= 1.0))
        throw DomainError("ef_band: concurrence must lie in [0, 1]");
    if (e == 0.0) return {0.0, 0.5}; // separable band
    return {(1.0 + 2.0 * e) / 3.0, axial_closed_form(e, 1.0)};
}

} // namespace steerkit
