#include "steerkit/quadrature.hpp"

#include <array>
#include <cstdio>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace steerkit {

namespace {

constexpr int kMinOrder = 2;
constexpr int kMaxProductGaussOrder = 4096;
constexpr int kMaxSubdivisionOrder = 256;
constexpr int kAdaptiveStartOrder = 8;

struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

// Newton iteration on the three-term Legendre recurrence. Rules are cached
// because bulk callers revisit the same few orders for every integrand.
std::shared_ptr<const GaussRule> gauss_rule(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const GaussRule>> cache;
    {
        std::scoped_lock lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }

    auto rule = std::make_shared<GaussRule>();
    rule->x.resize(n);
    rule->w.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule->x[i] = -x; // ascending from -1
        rule->w[i] = w;
        rule->x[n - 1 - i] = x;
        rule->w[n - 1 - i] = w;
    }

    std::scoped_lock lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(rule));
    (void)inserted;
    return it->second;
}

// Streamed product-Gauss sum; never materializes the grid.
double product_gauss_sum(int order, const SphereFunction& f, long* evals) {
    const auto rule = gauss_rule(order);
    const int m_phi = 2 * order;
    const double dphi = 2.0 * M_PI / m_phi;
    double total = 0.0;
    for (int i = 0; i < order; ++i) {
        const double z = rule->x[i];
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        double ring = 0.0;
        for (int j = 0; j < m_phi; ++j) {
            const double phi = dphi * j;
            ring += f({rho * std::cos(phi), rho * std::sin(phi), z});
        }
        total += rule->w[i] * dphi * ring;
    }
    if (evals) *evals += static_cast<long>(order) * m_phi;
    return total;
}

void append_product_gauss_nodes(int order, std::vector<SphereNode>& nodes) {
    const auto rule = gauss_rule(order);
    const int m_phi = 2 * order;
    const double dphi = 2.0 * M_PI / m_phi;
    nodes.reserve(nodes.size() + static_cast<std::size_t>(order) * m_phi);
    for (int i = 0; i < order; ++i) {
        const double z = rule->x[i];
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int j = 0; j < m_phi; ++j) {
            const double phi = dphi * j;
            nodes.push_back({{rho * std::cos(phi), rho * std::sin(phi), z},
                             rule->w[i] * dphi});
        }
    }
}

double spherical_excess(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                        const Eigen::Vector3d& c) {
    const double num = std::abs(a.dot(b.cross(c)));
    const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    return 2.0 * std::atan2(num, den);
}

void append_subdivided_face(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                            const Eigen::Vector3d& c, int freq,
                            std::vector<SphereNode>& nodes) {
    // Split the flat face into freq^2 triangles, project corners onto the
    // sphere, weight each cell by its spherical area.
    auto corner = [&](int i, int j) -> Eigen::Vector3d {
        const double u = static_cast<double>(i) / freq;
        const double v = static_cast<double>(j) / freq;
        return ((1.0 - u - v) * a + u * b + v * c).normalized();
    };
    for (int i = 0; i < freq; ++i) {
        for (int j = 0; j < freq - i; ++j) {
            const Eigen::Vector3d p = corner(i, j);
            const Eigen::Vector3d q = corner(i + 1, j);
            const Eigen::Vector3d r = corner(i, j + 1);
            nodes.push_back({(p + q + r).normalized(), spherical_excess(p, q, r)});
            if (i + j < freq - 1) {
                const Eigen::Vector3d s = corner(i + 1, j + 1);
                nodes.push_back({(q + s + r).normalized(), spherical_excess(q, s, r)});
            }
        }
    }
}

std::vector<SphereNode> subdivision_nodes(int order) {
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    std::vector<Eigen::Vector3d> v;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            v.push_back(Eigen::Vector3d(0, s1, s2 * phi).normalized());
            v.push_back(Eigen::Vector3d(s1, s2 * phi, 0).normalized());
            v.push_back(Eigen::Vector3d(s1 * phi, 0, s2).normalized());
        }
    // 20 faces as vertex index triples of the icosahedron above.
    static const std::array<std::array<int, 3>, 20> faces = [&] {
        std::array<std::array<int, 3>, 20> f{};
        int count = 0;
        // Faces are the triangles whose sides are all shortest edges.
        double min_d2 = std::numeric_limits<double>::max();
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                min_d2 = std::min(min_d2, (v[i] - v[j]).squaredNorm());
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                for (int k = j + 1; k < 12; ++k) {
                    const bool edge_ij = (v[i] - v[j]).squaredNorm() < min_d2 * 1.01;
                    const bool edge_jk = (v[j] - v[k]).squaredNorm() < min_d2 * 1.01;
                    const bool edge_ik = (v[i] - v[k]).squaredNorm() < min_d2 * 1.01;
                    if (edge_ij && edge_jk && edge_ik) f[count++] = {i, j, k};
                }
        return f;
    }();

    std::vector<SphereNode> nodes;
    nodes.reserve(static_cast<std::size_t>(20) * order * order);
    for (const auto& face : faces)
        append_subdivided_face(v[face[0]], v[face[1]], v[face[2]], order, nodes);
    return nodes;
}

double grid_sum(const SphereGrid& grid, const SphereFunction& f) {
    double total = 0.0;
    for (const auto& node : grid.nodes) total += node.weight * f(node.v);
    return total;
}

int max_order(SphereScheme scheme) {
    return scheme == SphereScheme::ProductGauss ? kMaxProductGaussOrder
                                                : kMaxSubdivisionOrder;
}

} // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    const auto rule = gauss_rule(n);
    return {rule->x, rule->w};
}

SphereGrid build_grid(SphereScheme scheme, int order) {
    if (order < kMinOrder || order > max_order(scheme))
        throw DomainError("build_grid: unsupported order " + std::to_string(order));
    SphereGrid grid;
    grid.scheme = scheme;
    grid.order = order;
    if (scheme == SphereScheme::ProductGauss)
        append_product_gauss_nodes(order, grid.nodes);
    else
        grid.nodes = subdivision_nodes(order);
    return grid;
}

QuadratureResult integrate(const SphereGrid& grid, const SphereFunction& f) {
    QuadratureResult result;
    result.value = grid_sum(grid, f);
    result.nodes_used = static_cast<long>(grid.nodes.size());
    const int half = grid.order / 2;
    if (half >= kMinOrder) {
        const SphereGrid coarse = build_grid(grid.scheme, half);
        result.estimated_error = std::abs(result.value - grid_sum(coarse, f));
        result.nodes_used += static_cast<long>(coarse.nodes.size());
    } else {
        result.estimated_error = std::numeric_limits<double>::infinity();
    }
    return result;
}

QuadratureResult integrate_adaptive(const SphereFunction& f, double target_rel_err,
                                    SphereScheme scheme) {
    if (!(target_rel_err > 0.0))
        throw DomainError("integrate_adaptive: target_rel_err must be positive");

    QuadratureResult result;
    double previous = 0.0;
    bool have_previous = false;
    for (int order = kAdaptiveStartOrder; order <= max_order(scheme); order *= 2) {
        double value;
        if (scheme == SphereScheme::ProductGauss) {
            value = product_gauss_sum(order, f, &result.nodes_used);
        } else {
            const auto nodes = subdivision_nodes(order);
            value = 0.0;
            for (const auto& node : nodes) value += node.weight * f(node.v);
            result.nodes_used += static_cast<long>(nodes.size());
        }
        if (have_previous) {
            const double diff = std::abs(value - previous);
            result.value = value;
            result.estimated_error = diff;
            if (diff <= target_rel_err * std::max(std::abs(value), 1e-30))
                return result;
        }
        previous = value;
        have_previous = true;
    }
    result.value = previous;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "%.3e",
                  result.estimated_error / std::max(std::abs(result.value), 1e-30));
    throw ConvergenceError(
        std::string("integrate_adaptive: order cap reached at relative error ") +
            detail,
        result);
}

} // namespace steerkit
