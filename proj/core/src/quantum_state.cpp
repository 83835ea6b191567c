#include "steerkit/quantum_state.hpp"

#include <cmath>
#include <sstream>

namespace steerkit {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = -1e-10;
constexpr double kUnitaryTol = 1e-10;
constexpr double kUnitNormTol = 1e-10;

std::string format_residual(double r) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << r;
    return os.str();
}

} // namespace

const Eigen::Matrix2cd& pauli(int axis) {
    using namespace std::complex_literals;
    static const Eigen::Matrix2cd sx = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    static const Eigen::Matrix2cd sy = (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished();
    static const Eigen::Matrix2cd sz = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    static const Eigen::Matrix2cd* table[3] = {&sx, &sy, &sz};
    return *table[axis];
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

std::vector<std::string> validate(const DensityMatrix& rho) {
    std::vector<std::string> violations;
    const Eigen::Matrix4cd& m = rho.matrix();

    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol)
        violations.push_back("non-Hermitian: max |m - m^dag| = " + format_residual(herm));

    const double trace_residual = std::abs(m.trace() - 1.0);
    if (trace_residual > kTraceTol)
        violations.push_back("trace residual " + format_residual(trace_residual));

    // Eigenvalues of the Hermitian part; meaningful whenever herm is small.
    const Eigen::Matrix4cd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < kPsdTol)
        violations.push_back("not positive semidefinite: min eigenvalue = " +
                             format_residual(min_eig));

    return violations;
}

void ensure_valid(const DensityMatrix& rho) {
    auto violations = validate(rho);
    if (violations.empty()) return;
    std::string what = "invalid density matrix:";
    for (const auto& v : violations) what += " [" + v + "]";
    throw InvalidStateError(what, std::move(violations));
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
    ensure_valid(rho);
    CorrelationMatrix out;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            out.t(m, n) = (rho.matrix() * kron(pauli(m), pauli(n))).trace().real();
    return out;
}

BlochPair local_bloch(const DensityMatrix& rho) {
    ensure_valid(rho);
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    BlochPair out;
    for (int m = 0; m < 3; ++m) {
        out.a(m) = (rho.matrix() * kron(pauli(m), id)).trace().real();
        out.b(m) = (rho.matrix() * kron(id, pauli(m))).trace().real();
    }
    return out;
}

bool is_t_state(const DensityMatrix& rho, double tol) {
    const BlochPair bloch = local_bloch(rho);
    const double worst =
        std::max(bloch.a.cwiseAbs().maxCoeff(), bloch.b.cwiseAbs().maxCoeff());
    return worst <= tol;
}

DensityMatrix mix_with_white_noise(const DensityMatrix& rho, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw DomainError("mix_with_white_noise: gamma must lie in [0, 1]");
    return DensityMatrix(gamma * rho.matrix() +
                         (1.0 - gamma) * 0.25 * Eigen::Matrix4cd::Identity());
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho,
                                  const Eigen::Matrix2cd& u_alice,
                                  const Eigen::Matrix2cd& u_bob) {
    for (const auto* u : {&u_alice, &u_bob}) {
        const double residual =
            ((*u) * u->adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
        if (residual > kUnitaryTol)
            throw DomainError("apply_local_unitary: factor is not unitary (residual " +
                              format_residual(residual) + ")");
    }
    const Eigen::Matrix4cd u = kron(u_alice, u_bob);
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

DensityMatrix phase_damp(const DensityMatrix& rho, double eta) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw DomainError("phase_damp: eta must lie in [0, 1]");
    Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - eta);
    Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
    k1(1, 1) = std::sqrt(eta);

    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    const Eigen::Matrix4cd m0 = kron(id, k0);
    const Eigen::Matrix4cd m1 = kron(id, k1);
    return DensityMatrix(m0 * rho.matrix() * m0.adjoint() +
                         m1 * rho.matrix() * m1.adjoint());
}

ConditionalStateSpectrum conditional_spectrum(const CorrelationMatrix& t,
                                              const Eigen::Vector3d& r) {
    if (std::abs(r.norm() - 1.0) > kUnitNormTol)
        throw DomainError("conditional_spectrum: direction must be a unit vector");
    const Eigen::Vector3d w = t.t.transpose() * r; // <r|T T^t|r> = |T^t r|^2
    double u = w.norm();
    if (u > 1.0 + 1e-9)
        throw DomainError("conditional_spectrum: correlation matrix maps a unit "
                          "vector outside the Bloch ball (|T^t r| = " +
                          format_residual(u) + ")");
    u = std::min(u, 1.0);
    ConditionalStateSpectrum out;
    out.lambda1 = 0.5 * (1.0 + u);
    out.lambda2 = 1.0 - out.lambda1; // exact complement
    return out;
}

} // namespace steerkit
