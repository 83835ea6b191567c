#include "steerkit/steering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "steerkit/entanglement.hpp"

namespace steerkit {

namespace {

constexpr double kDegenerateTol = 1e-12;
constexpr double kSpectrumUpperSlack = 1e-9;
constexpr double kTStateTol = 1e-8;
constexpr int kMaxExhaustiveAxes = 24;

} // namespace

SingularSpectrum::SingularSpectrum(double a, double b, double c) {
    double v[3] = {a, b, c};
    std::sort(std::begin(v), std::end(v), std::greater<>());
    if (v[2] < -kDegenerateTol)
        throw DomainError("SingularSpectrum: values must be non-negative");
    if (v[0] > 1.0 + kSpectrumUpperSlack)
        throw DomainError("SingularSpectrum: largest value exceeds 1 (" +
                          std::to_string(v[0]) + "); not a physical correlation matrix");
    t1_ = std::min(v[0], 1.0);
    t2_ = std::max(v[1], 0.0);
    t3_ = std::max(v[2], 0.0);
    t2_ = std::min(t2_, t1_);
    t3_ = std::min(t3_, t2_);
}

MeasurementGeometry::MeasurementGeometry(std::string name,
                                         std::vector<Eigen::Vector3d> axes)
    : name_(std::move(name)), axes_(std::move(axes)) {
    if (axes_.empty())
        throw DomainError("MeasurementGeometry: axis list must be non-empty");
    for (const auto& axis : axes_)
        if (std::abs(axis.norm() - 1.0) > 1e-10)
            throw DomainError("MeasurementGeometry '" + name_ +
                              "': axes must be unit vectors");
    for (std::size_t i = 0; i < axes_.size(); ++i)
        for (std::size_t j = i + 1; j < axes_.size(); ++j)
            if (axes_[i].cross(axes_[j]).norm() <= 1e-8)
                throw DomainError("MeasurementGeometry '" + name_ +
                                  "': axes " + std::to_string(i) + " and " +
                                  std::to_string(j) + " are collinear");
}

const char* to_string(ViolationMethod method) {
    switch (method) {
        case ViolationMethod::Isotropic: return "isotropic";
        case ViolationMethod::ClosedFormAxial: return "closed-form-axial";
        case ViolationMethod::Quadrature: return "quadrature";
    }
    return "unknown";
}

SingularSpectrum singular_spectrum(const CorrelationMatrix& t) {
    // Bell-diagonal states produce exactly diagonal T; their singular values
    // are the |diagonal| bit-for-bit, without SVD rounding.
    bool diagonal = true;
    for (int i = 0; i < 3 && diagonal; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && t.t(i, j) != 0.0) {
                diagonal = false;
                break;
            }
    if (diagonal)
        return {std::abs(t.t(0, 0)), std::abs(t.t(1, 1)), std::abs(t.t(2, 2))};
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(t.t);
    const Eigen::Vector3d s = svd.singularValues();
    return {s(0), s(1), s(2)};
}

double axial_closed_form(double a, double c) {
    if (a < 0.0 || c < 0.0)
        throw DomainError("axial_closed_form: singular values must be non-negative");
    const double scale = std::max(a, c);
    if (scale == 0.0) return 0.0;
    if (std::abs(c - a) <= kDegenerateTol * scale) return 0.5 * (a + c);
    if (a == 0.0) return 0.5 * c; // limit of the log branch
    if (c > a) {
        const double s = std::sqrt((c - a) * (c + a));
        return 0.5 * (c + a * a / s * std::log1p((c - a + s) / a));
    }
    const double s = std::sqrt((a - c) * (a + c));
    return 0.5 * (c + a * a / s * std::asin(std::min(1.0, s / a)));
}

ViolationEstimate max_violation(const SingularSpectrum& spec, double target_rel_err) {
    const double tol = kDegenerateTol * std::max(1.0, spec.t1());
    ViolationEstimate out;
    if (spec.t1() - spec.t3() <= tol) {
        out.f_value = spec.t1();
        out.method = ViolationMethod::Isotropic;
        out.estimated_error = 0.0;
        return out;
    }

    // Axial pair = the closer of (t1, t2) and (t2, t3).
    const bool top_pair = spec.t1() - spec.t2() <= spec.t2() - spec.t3();
    const double a =
        top_pair ? 0.5 * (spec.t1() + spec.t2()) : 0.5 * (spec.t2() + spec.t3());
    const double c = top_pair ? spec.t3() : spec.t1();
    const double half_gap =
        0.5 * (top_pair ? spec.t1() - spec.t2() : spec.t2() - spec.t3());

    if (half_gap <= tol) {
        out.f_value = axial_closed_form(a, c);
        out.method = ViolationMethod::ClosedFormAxial;
        out.estimated_error = 4.0 * std::numeric_limits<double>::epsilon() * out.f_value;
        return out;
    }

    // Projecting a near-axial spectrum onto (a, a, c) perturbs F at second
    // order only (the first order cancels by y/z symmetry):
    //   |dF| <= 3 d^2 (1 + log(1 + max(a,c)/a)) / max(a,c).
    // Take the closed form whenever that certifies half the requested
    // tolerance; F >= t1/2 anchors the relative target. This covers the
    // near-rank-1 spectra whose equatorial layer defeats the quadrature.
    const double scale = std::max(a, c);
    const double projection_error =
        3.0 * half_gap * half_gap * (1.0 + std::log1p(scale / std::max(a, 1e-300))) /
        scale;
    if (projection_error <= 0.5 * target_rel_err * (0.5 * spec.t1())) {
        out.f_value = axial_closed_form(a, c);
        out.method = ViolationMethod::ClosedFormAxial;
        out.estimated_error =
            projection_error + 4.0 * std::numeric_limits<double>::epsilon() * out.f_value;
        return out;
    }

    return max_violation_quadrature(spec, target_rel_err);
}

ViolationEstimate max_violation_quadrature(const SingularSpectrum& spec,
                                           double target_rel_err,
                                           SphereScheme scheme) {
    const double t1 = spec.t1(), t2 = spec.t2(), t3 = spec.t3();
    const auto integrand = [t1, t2, t3](const Eigen::Vector3d& v) {
        return std::sqrt(t1 * t1 * v.x() * v.x() + t2 * t2 * v.y() * v.y() +
                         t3 * t3 * v.z() * v.z());
    };
    constexpr double norm = 1.0 / (4.0 * M_PI);
    try {
        const QuadratureResult r = integrate_adaptive(integrand, target_rel_err, scheme);
        return {r.value * norm, ViolationMethod::Quadrature, r.estimated_error * norm};
    } catch (const ConvergenceError& e) {
        QuadratureResult best = e.best();
        best.value *= norm;
        best.estimated_error *= norm;
        throw ConvergenceError(std::string("max_violation: ") + e.what(), best);
    }
}

SteeringReport steering_verdict(const DensityMatrix& rho, double target_rel_err) {
    ensure_valid(rho);
    if (!is_t_state(rho, kTStateTol)) {
        const BlochPair bloch = local_bloch(rho);
        throw NotTStateError(
            "steering_verdict requires a T state (local Bloch vectors below 1e-8); "
            "got |a|_inf = " + std::to_string(bloch.a.cwiseAbs().maxCoeff()) +
            ", |b|_inf = " + std::to_string(bloch.b.cwiseAbs().maxCoeff()));
    }
    const SingularSpectrum spec = singular_spectrum(correlation_matrix(rho));
    const ViolationEstimate violation = max_violation(spec, target_rel_err);

    SteeringReport report;
    report.f_value = std::clamp(violation.f_value, 0.0, 1.0);
    report.bound = 0.5;
    report.method = violation.method;
    report.estimated_error = violation.estimated_error;
    report.steerable = report.f_value - report.estimated_error > report.bound;
    report.concurrence = concurrence(rho).concurrence;
    return report;
}

double steering_parameter_finite(const CorrelationMatrix& t,
                                 const MeasurementGeometry& geom) {
    double total = 0.0;
    for (const auto& s : geom.axes()) total += (t.t * s).norm(); // |T s| = sqrt(<s|T^t T|s>)
    return total / geom.size();
}

double finite_bound(const MeasurementGeometry& geom) {
    const int n = geom.size();
    if (n > kMaxExhaustiveAxes)
        throw DomainError("finite_bound: exhaustive sign search supports at most 24 "
                          "axes; larger geometries need a heuristic search");
    const auto& axes = geom.axes();
    double best = 0.0;
    const std::uint64_t patterns = 1ULL << (n - 1); // A_1 fixed to +1
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        Eigen::Vector3d sum = axes[0];
        for (int k = 1; k < n; ++k)
            sum += (mask >> (k - 1)) & 1 ? -axes[k] : axes[k];
        best = std::max(best, sum.norm());
    }
    return best / n;
}

bool lhs_condition_holds(const CorrelationMatrix& t, const Eigen::Vector3d& r) {
    if (std::abs(r.norm() - 1.0) > 1e-10)
        throw DomainError("lhs_condition_holds: direction must be a unit vector");
    const double u = (t.t.transpose() * r).norm(); // sqrt(<r|T T^t|r>)
    const bool holds = u <= 0.5 + kDegenerateTol;

    if (u <= 1.0 + 1e-9) {
        // Same statement through the conditional-state eigenvalues.
        const ConditionalStateSpectrum lam = conditional_spectrum(t, r);
        const bool via_lambda =
            lam.lambda1 <= 2.0 * std::sqrt(lam.lambda2) - lam.lambda2 + kDegenerateTol;
        if (std::abs(u - 0.5) > 1e-9 && via_lambda != holds)
            throw Error("lhs_condition_holds: eigenvalue form disagrees with the "
                        "correlation form away from the boundary");
    }
    return holds;
}

const std::vector<MeasurementGeometry>& geometry_catalog() {
    static const std::vector<MeasurementGeometry> catalog = [] {
        const double phi = 0.5 * (1.0 + std::sqrt(5.0));
        std::vector<MeasurementGeometry> list;

        list.emplace_back("orthogonal-2",
                          std::vector<Eigen::Vector3d>{{1, 0, 0}, {0, 0, 1}});
        list.emplace_back("orthogonal-3", std::vector<Eigen::Vector3d>{
                                              {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

        std::vector<Eigen::Vector3d> cube;
        for (double sy : {1.0, -1.0})
            for (double sz : {1.0, -1.0})
                cube.push_back(Eigen::Vector3d(1, sy, sz).normalized());
        list.emplace_back("cube-diagonals-4", std::move(cube));

        // One vertex per antipodal pair of the icosahedron.
        std::vector<Eigen::Vector3d> ico;
        for (double s : {1.0, -1.0}) {
            ico.push_back(Eigen::Vector3d(0, s, phi).normalized());
            ico.push_back(Eigen::Vector3d(s, phi, 0).normalized());
            ico.push_back(Eigen::Vector3d(phi, 0, s).normalized());
        }
        list.emplace_back("icosahedron-6", std::move(ico));

        // One vertex per antipodal pair of the dodecahedron.
        std::vector<Eigen::Vector3d> dod;
        for (double sy : {1.0, -1.0})
            for (double sz : {1.0, -1.0})
                dod.push_back(Eigen::Vector3d(1, sy, sz).normalized());
        for (double s : {1.0, -1.0}) {
            dod.push_back(Eigen::Vector3d(0, s / phi, phi).normalized());
            dod.push_back(Eigen::Vector3d(s / phi, phi, 0).normalized());
            dod.push_back(Eigen::Vector3d(phi, 0, s / phi).normalized());
        }
        list.emplace_back("dodecahedron-10", std::move(dod));
        return list;
    }();
    return catalog;
}

} // namespace steerkit
