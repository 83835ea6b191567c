#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "steerkit/errors.hpp"

namespace steerkit {

/// Scalar function on the unit sphere.
using SphereFunction = std::function<double(const Eigen::Vector3d&)>;

enum class SphereScheme {
    ProductGauss, // Gauss-Legendre in cos(theta) x trapezoid in phi
    Subdivision,  // geodesic icosahedron, centroid nodes, spherical-excess weights
};

struct SphereNode {
    Eigen::Vector3d v;
    double weight; // steradians
};

/// Quadrature rule on the unit sphere. Weights sum to 4*pi.
///
/// ProductGauss of order n places n polar x 2n azimuthal nodes and is exact
/// for polynomials of degree <= 2n-1 in cos(theta). Subdivision of order k
/// splits each icosahedron face into k^2 spherical triangles (20 k^2 nodes).
struct SphereGrid {
    SphereScheme scheme = SphereScheme::ProductGauss;
    int order = 0;
    std::vector<SphereNode> nodes;
};

struct QuadratureResult {
    double value = 0.0;
    double estimated_error = 0.0;
    long nodes_used = 0; // total integrand evaluations
};

/// Adaptive integration ran out of refinement levels before reaching the
/// requested tolerance; `best` holds the finest estimate obtained.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, QuadratureResult best)
        : Error(what), best_(best) {}

    const QuadratureResult& best() const { return best_; }

private:
    QuadratureResult best_;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Builds a grid; order must be >= 2 and at most 4096 (ProductGauss) or
/// 256 (Subdivision).
SphereGrid build_grid(SphereScheme scheme, int order);

/// Sum of w_i f(v_i) over the grid. The error estimate compares against the
/// same scheme at half the order (infinite when the order cannot be halved).
QuadratureResult integrate(const SphereGrid& grid, const SphereFunction& f);

/// Doubles the grid order starting from 8 until two successive estimates
/// agree to `target_rel_err` relative, or the 4096-polar-node cap is hit
/// (ConvergenceError carrying the best estimate). ProductGauss evaluation
/// is streamed, so large orders never materialize node lists.
QuadratureResult integrate_adaptive(const SphereFunction& f, double target_rel_err,
                                    SphereScheme scheme = SphereScheme::ProductGauss);

} // namespace steerkit
