#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>
#include <vector>

#include "steerkit/quantum_state.hpp"
#include "steerkit/random.hpp"

namespace steerkit {

/// Diagonal (c1, c2, c3) of a Bell-diagonal correlation matrix. Admissible
/// parameters are exactly those whose four Bell-basis weights are
/// non-negative (the tetrahedron inside [-1, 1]^3).
struct BellDiagonalParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    /// Weights of |Phi+>, |Phi->, |Psi+>, |Psi-> in that order.
    std::array<double, 4> bell_weights() const;

    /// All weights >= -1e-12.
    bool admissible() const;
};

/// Convex mixture of product states with exactly vanishing local Bloch
/// vectors; terms come in antipodal pairs by construction.
struct SeparableMixture {
    struct Term {
        double p;          // probability
        Eigen::Vector3d a; // Alice Bloch direction
        Eigen::Vector3d b; // Bob Bloch direction
    };
    std::vector<Term> terms;

    DensityMatrix to_density_matrix() const;
};

/// Werner state alpha |phi_B><phi_B| + (1-alpha)/4, |phi_B> = (|00>+|11>)/sqrt(2).
/// Requires -1/3 <= alpha <= 1; T = diag(alpha, -alpha, alpha).
DensityMatrix werner(double alpha);

/// Werner state pushed through one-sided phase damping; the correlation
/// matrix is exactly diag(alpha sqrt(1-eta), -alpha sqrt(1-eta), alpha).
DensityMatrix werner_pd(double alpha, double eta);

/// Bell-diagonal state (1/4)(1 + sum_m c_m sigma_m x sigma_m).
DensityMatrix bell_diagonal_from_t(const BellDiagonalParams& params);

/// T state with the given correlation matrix, (1/4)(1 + sum T_mn sigma_m x
/// sigma_n); throws InvalidStateError when T is not realizable.
DensityMatrix t_state_from_correlation(const CorrelationMatrix& t);

/// Rank-2 T state: the equal mixture of |psi> with its spin-flipped partner.
/// Its singular spectrum is (1, E, E) with E the pure-state concurrence.
DensityMatrix rank2_t_state(const Eigen::Vector4cd& psi);

/// Uniform sample from the Bell-diagonal tetrahedron (rejection from the
/// cube, acceptance rate 1/3).
BellDiagonalParams random_bell_diagonal(RngStream& rng);

/// Random separable T state: n_terms product terms with uniform directions
/// and Dirichlet-uniform weights, each paired with its antipode so both
/// local Bloch vectors vanish exactly.
std::pair<SeparableMixture, DensityMatrix> random_separable_t(int n_terms,
                                                              RngStream& rng);

} // namespace steerkit
