#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "steerkit/errors.hpp"

namespace steerkit {

/// Two-qubit density matrix in the product basis |00>, |01>, |10>, |11>
/// (row-major). Valid instances are Hermitian (1e-12), unit-trace (1e-12)
/// and positive semidefinite (eigenvalues >= -1e-10); use `validate` /
/// `ensure_valid` to check.
class DensityMatrix {
public:
    explicit DensityMatrix(const Eigen::Matrix4cd& m) : m_(m) {}

    const Eigen::Matrix4cd& matrix() const { return m_; }

private:
    Eigen::Matrix4cd m_;
};

/// 3x3 real matrix of two-sided Pauli expectation values
///   t(m,n) = Tr[rho (sigma_m x sigma_n)],
/// Pauli order (x, y, z) on both indices.
struct CorrelationMatrix {
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

/// Local Bloch vectors of the two reduced states.
struct BlochPair {
    Eigen::Vector3d a = Eigen::Vector3d::Zero(); // Alice
    Eigen::Vector3d b = Eigen::Vector3d::Zero(); // Bob
};

/// Eigenvalues of Bob's normalized conditional state for one of Alice's
/// measurement directions. lambda1 >= lambda2, lambda1 + lambda2 == 1.
struct ConditionalStateSpectrum {
    double lambda1 = 0.5;
    double lambda2 = 0.5;
};

/// Pauli matrices, index 0..2 = (x, y, z).
const Eigen::Matrix2cd& pauli(int axis);

/// Kronecker product of two single-qubit operators, first factor on Alice.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

/// Diagnostic check of the DensityMatrix invariants. Returns one entry per
/// violated invariant with the measured residual; empty means valid.
std::vector<std::string> validate(const DensityMatrix& rho);

/// Throws InvalidStateError (carrying the violation list) unless valid.
void ensure_valid(const DensityMatrix& rho);

/// Correlation matrix T of a valid state.
CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

/// Local Bloch vectors a = Tr[rho (sigma x 1)], b = Tr[rho (1 x sigma)].
BlochPair local_bloch(const DensityMatrix& rho);

/// True iff both local Bloch vectors vanish within `tol` (max norm).
bool is_t_state(const DensityMatrix& rho, double tol = 1e-8);

/// Convex mixture gamma * rho + (1 - gamma) * 1/4. Requires gamma in [0, 1].
DensityMatrix mix_with_white_noise(const DensityMatrix& rho, double gamma);

/// Conjugation by a product of local unitaries (checked to 1e-10).
DensityMatrix apply_local_unitary(const DensityMatrix& rho,
                                  const Eigen::Matrix2cd& u_alice,
                                  const Eigen::Matrix2cd& u_bob);

/// Phase damping of strength eta applied to Bob's qubit, Kraus operators
/// K0 = |0><0| + sqrt(1-eta)|1><1| and K1 = sqrt(eta)|1><1|. Off-diagonal
/// correlations pick up a single factor sqrt(1-eta). Requires eta in [0, 1].
DensityMatrix phase_damp(const DensityMatrix& rho, double eta);

/// Spectrum of Bob's conditional state for Alice's unit direction r:
///   lambda1 = (1 + sqrt(<r| T T^t |r>)) / 2.
ConditionalStateSpectrum conditional_spectrum(const CorrelationMatrix& t,
                                              const Eigen::Vector3d& r);

} // namespace steerkit
