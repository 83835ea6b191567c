#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "steerkit/quadrature.hpp"
#include "steerkit/quantum_state.hpp"

namespace steerkit {

/// Singular values of a correlation matrix, sorted descending. For a valid
/// two-qubit state every singular value lies in [0, 1].
class SingularSpectrum {
public:
    /// Accepts the three values in any order; sorts descending and validates
    /// 0 <= t <= 1 (with 1e-9 headroom for floating-point overshoot).
    SingularSpectrum(double a, double b, double c);

    double t1() const { return t1_; }
    double t2() const { return t2_; }
    double t3() const { return t3_; }

private:
    double t1_, t2_, t3_;
};

/// Named list of projective measurement axes (unit 3-vectors). No two axes
/// may be collinear; antipodal duplicates count as collinear.
class MeasurementGeometry {
public:
    MeasurementGeometry(std::string name, std::vector<Eigen::Vector3d> axes);

    const std::string& name() const { return name_; }
    const std::vector<Eigen::Vector3d>& axes() const { return axes_; }
    int size() const { return static_cast<int>(axes_.size()); }

private:
    std::string name_;
    std::vector<Eigen::Vector3d> axes_;
};

enum class ViolationMethod {
    Isotropic,       // all three singular values equal: F = t1
    ClosedFormAxial, // two equal values: logarithm / arcsine closed form
    Quadrature,      // three distinct values: adaptive spherical quadrature
};

const char* to_string(ViolationMethod method);

/// Everything the steering criterion produces for one state.
struct SteeringReport {
    double f_value = 0.0;         // maximum violation F
    double bound = 0.5;           // infinite-measurement bound
    bool steerable = false;       // f_value - estimated_error > bound
    double concurrence = 0.0;
    ViolationMethod method = ViolationMethod::Quadrature;
    double estimated_error = 0.0;
};

/// f_value / method / estimated_error slice of a SteeringReport, for callers
/// that start from a spectrum instead of a state.
struct ViolationEstimate {
    double f_value = 0.0;
    ViolationMethod method = ViolationMethod::Quadrature;
    double estimated_error = 0.0;
};

/// Singular values of T, descending.
SingularSpectrum singular_spectrum(const CorrelationMatrix& t);

/// Maximum violation for the spectrum (a, a, c) in closed form:
///   c > a:  [c + a^2/sqrt(c^2-a^2) * ln((c+sqrt(c^2-a^2))/a)] / 2
///   c < a:  [c + a^2/sqrt(a^2-c^2) * asin(sqrt(a^2-c^2)/a)] / 2
///   c == a: a
/// The a -> 0 limit is c/2.
double axial_closed_form(double a, double c);

/// Maximum violation F, dispatching on the spectrum's degeneracy: isotropic
/// and axially symmetric spectra use exact expressions, the generic case
/// integrates sqrt(<v|Lambda^2|v>)/(4 pi) adaptively.
ViolationEstimate max_violation(const SingularSpectrum& spec,
                                double target_rel_err = 1e-9);

/// Quadrature evaluation regardless of degeneracy (cross-checks the closed
/// forms; propagates ConvergenceError with F-scale best estimate).
ViolationEstimate max_violation_quadrature(const SingularSpectrum& spec,
                                           double target_rel_err = 1e-9,
                                           SphereScheme scheme = SphereScheme::ProductGauss);

/// Full report for a T state: maximum violation, concurrence and the
/// steerable verdict F - err > 1/2. Throws NotTStateError when either local
/// Bloch vector exceeds 1e-8.
SteeringReport steering_verdict(const DensityMatrix& rho,
                                double target_rel_err = 1e-9);

/// Alice-optimized steering parameter for finitely many settings:
///   (1/N) sum_k sqrt(<s_k| T^t T |s_k>).
double steering_parameter_finite(const CorrelationMatrix& t,
                                 const MeasurementGeometry& geom);

/// Cheating bound C_N = max over sign patterns of |sum_k A_k s_k| / N,
/// searched exhaustively with A_1 = +1 (global sign symmetry). Requires
/// N <= 24.
double finite_bound(const MeasurementGeometry& geom);

/// Sufficient unsteerability condition for direction r:
///   sqrt(<r| T T^t |r>) <= 1/2. Also cross-checks the equivalent
/// conditional-eigenvalue form lambda1 <= 2 sqrt(lambda2) - lambda2.
bool lhs_condition_holds(const CorrelationMatrix& t, const Eigen::Vector3d& r);

/// Built-in geometries: orthogonal-2, orthogonal-3, cube-diagonals-4,
/// icosahedron-6, dodecahedron-10 (vertex pairs collapsed to single axes).
const std::vector<MeasurementGeometry>& geometry_catalog();

} // namespace steerkit
