#include "steerkit/families.hpp"

#include <cmath>

#include "steerkit/steering.hpp"

namespace steerkit {

namespace {

constexpr double kWeightTol = -1e-12;

Eigen::Matrix4cd product_state(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    Eigen::Matrix2cd rho_a = 0.5 * Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd rho_b = 0.5 * Eigen::Matrix2cd::Identity();
    for (int m = 0; m < 3; ++m) {
        rho_a += 0.5 * a(m) * pauli(m);
        rho_b += 0.5 * b(m) * pauli(m);
    }
    return kron(rho_a, rho_b);
}

} // namespace

std::array<double, 4> BellDiagonalParams::bell_weights() const {
    return {
        0.25 * (1.0 + c1 - c2 + c3), // |Phi+>
        0.25 * (1.0 - c1 + c2 + c3), // |Phi->
        0.25 * (1.0 + c1 + c2 - c3), // |Psi+>
        0.25 * (1.0 - c1 - c2 - c3), // |Psi->
    };
}

bool BellDiagonalParams::admissible() const {
    for (double w : bell_weights())
        if (w < kWeightTol) return false;
    return true;
}

DensityMatrix SeparableMixture::to_density_matrix() const {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (const auto& term : terms) m += term.p * product_state(term.a, term.b);
    return DensityMatrix(m);
}

DensityMatrix werner(double alpha) {
    if (!(alpha >= -1.0 / 3.0 && alpha <= 1.0))
        throw DomainError("werner: alpha must lie in [-1/3, 1]");
    // Bell projector written with exact 0.5 entries; squaring 1/sqrt(2)
    // would already cost an ulp.
    Eigen::Matrix4cd bell = Eigen::Matrix4cd::Zero();
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    return DensityMatrix(alpha * bell +
                         (1.0 - alpha) * 0.25 * Eigen::Matrix4cd::Identity());
}

DensityMatrix werner_pd(double alpha, double eta) {
    if (!(alpha >= -1.0 / 3.0 && alpha <= 1.0))
        throw DomainError("werner_pd: alpha must lie in [-1/3, 1]");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw DomainError("werner_pd: eta must lie in [0, 1]");
    // Built directly from the damped correlation diagonal; agrees with
    // phase_damp(werner(alpha), eta) entrywise.
    const double damped = alpha * std::sqrt(1.0 - eta);
    return bell_diagonal_from_t({damped, -damped, alpha});
}

DensityMatrix bell_diagonal_from_t(const BellDiagonalParams& params) {
    for (double w : params.bell_weights())
        if (w < kWeightTol)
            throw InvalidStateError(
                "bell_diagonal_from_t: parameters leave the Bell tetrahedron "
                "(negative weight " + std::to_string(w) + ")",
                {"Bell weight " + std::to_string(w) + " < 0"});
    Eigen::Matrix4cd m = 0.25 * Eigen::Matrix4cd::Identity();
    const double c[3] = {params.c1, params.c2, params.c3};
    for (int k = 0; k < 3; ++k) m += 0.25 * c[k] * kron(pauli(k), pauli(k));
    return DensityMatrix(m);
}

DensityMatrix t_state_from_correlation(const CorrelationMatrix& t) {
    Eigen::Matrix4cd m = 0.25 * Eigen::Matrix4cd::Identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m += 0.25 * t.t(i, j) * kron(pauli(i), pauli(j));
    DensityMatrix rho(m);
    if (validate(rho).empty()) return rho;

    // The literal reconstruction is not PSD. Steering and concurrence only
    // depend on the singular spectrum, so fall back to the Bell-diagonal
    // representative (t1, -t2, t3): it is admissible exactly when some state
    // realizes the spectrum (t1 + t2 - t3 <= 1).
    const SingularSpectrum spec = singular_spectrum(t);
    const BellDiagonalParams representative{spec.t1(), -spec.t2(), spec.t3()};
    if (representative.admissible()) return bell_diagonal_from_t(representative);
    throw InvalidStateError(
        "t_state_from_correlation: no two-qubit state has this correlation "
        "matrix (singular values " + std::to_string(spec.t1()) + ", " +
            std::to_string(spec.t2()) + ", " + std::to_string(spec.t3()) +
            " violate t1 + t2 - t3 <= 1)",
        {"unrealizable correlation matrix"});
}

DensityMatrix rank2_t_state(const Eigen::Vector4cd& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw DomainError("rank2_t_state: state vector must be normalized");
    const Eigen::Vector4cd flipped = kron(pauli(1), pauli(1)) * psi.conjugate();
    return DensityMatrix(0.5 * (psi * psi.adjoint() + flipped * flipped.adjoint()));
}

BellDiagonalParams random_bell_diagonal(RngStream& rng) {
    for (;;) {
        BellDiagonalParams params{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                  rng.uniform(-1.0, 1.0)};
        if (params.admissible()) return params;
    }
}

std::pair<SeparableMixture, DensityMatrix> random_separable_t(int n_terms,
                                                              RngStream& rng) {
    if (n_terms < 1)
        throw DomainError("random_separable_t: n_terms must be at least 1");
    const std::vector<double> weights = rng.simplex_weights(n_terms);
    SeparableMixture mixture;
    mixture.terms.reserve(2 * static_cast<std::size_t>(n_terms));
    for (int i = 0; i < n_terms; ++i) {
        const Eigen::Vector3d a = rng.unit_vector();
        const Eigen::Vector3d b = rng.unit_vector();
        // Antipodal pairing cancels both local Bloch vectors exactly while
        // contributing the same dyad p_i |a_i><b_i| to T.
        mixture.terms.push_back({0.5 * weights[i], a, b});
        mixture.terms.push_back({0.5 * weights[i], -a, -b});
    }
    DensityMatrix rho = mixture.to_density_matrix();
    return {std::move(mixture), std::move(rho)};
}

} // namespace steerkit
