#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "steerkit/quadrature.hpp"
#include "steerkit/random.hpp"

using namespace steerkit;

namespace {

constexpr double kFourPi = 4.0 * M_PI;

SphereFunction spectrum_integrand(double t1, double t2, double t3) {
    return [=](const Eigen::Vector3d& v) {
        return std::sqrt(t1 * t1 * v.x() * v.x() + t2 * t2 * v.y() * v.y() +
                         t3 * t3 * v.z() * v.z());
    };
}

Eigen::Matrix3d rotation(const Eigen::Vector3d& axis_raw, double angle) {
    return Eigen::AngleAxisd(angle, axis_raw.normalized()).toRotationMatrix();
}

} // namespace

TEST_CASE("grid invariants hold for both schemes") {
    for (auto scheme : {SphereScheme::ProductGauss, SphereScheme::Subdivision}) {
        for (int order : {2, 4, 16}) {
            const SphereGrid grid = build_grid(scheme, order);
            double weight_sum = 0.0;
            for (const auto& node : grid.nodes) {
                CHECK(std::abs(node.v.norm() - 1.0) <= 1e-12);
                CHECK(node.weight > 0.0);
                weight_sum += node.weight;
            }
            CHECK(std::abs(weight_sum - kFourPi) <= 1e-9);

            const auto one = integrate(grid, [](const Eigen::Vector3d&) { return 1.0; });
            CHECK(std::abs(one.value - kFourPi) <= 1e-9);
            const auto odd = integrate(grid, [](const Eigen::Vector3d& v) { return v.z(); });
            CHECK(std::abs(odd.value) <= 1e-9);
        }
    }
    CHECK(build_grid(SphereScheme::ProductGauss, 16).nodes.size() == 16 * 32);
    CHECK(build_grid(SphereScheme::Subdivision, 3).nodes.size() == 20 * 9);
}

TEST_CASE("unsupported orders are rejected") {
    CHECK_THROWS_AS(build_grid(SphereScheme::ProductGauss, 1), DomainError);
    CHECK_THROWS_AS(build_grid(SphereScheme::ProductGauss, 8192), DomainError);
    CHECK_THROWS_AS(build_grid(SphereScheme::Subdivision, 0), DomainError);
    CHECK_THROWS_AS(build_grid(SphereScheme::Subdivision, 512), DomainError);
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
    const auto [x, w] = gauss_legendre(5);
    REQUIRE(x.size() == 5);
    for (int degree = 0; degree <= 9; ++degree) {
        double got = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) got += w[i] * std::pow(x[i], degree);
        const double expected = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
        CHECK(std::abs(got - expected) <= 1e-14);
    }
}

TEST_CASE("sphere moments") {
    const SphereGrid grid = build_grid(SphereScheme::ProductGauss, 16);

    const auto zz = integrate(grid, [](const Eigen::Vector3d& v) { return v.z() * v.z(); });
    CHECK(std::abs(zz.value - kFourPi / 3.0) <= 1e-12);

    // |v_z| has an equatorial kink; product-Gauss converges slowly there but
    // the half-order comparison must cover the true error
    const auto abs_z =
        integrate(grid, [](const Eigen::Vector3d& v) { return std::abs(v.z()); });
    CHECK(std::abs(abs_z.value - 2.0 * M_PI) <= 0.05);
    CHECK(abs_z.estimated_error >= std::abs(abs_z.value - 2.0 * M_PI));

    // constant-magnitude spectrum integrand
    const auto iso = integrate(grid, spectrum_integrand(1.0, 1.0, 1.0));
    CHECK(std::abs(iso.value - kFourPi) <= 1e-12);
}

TEST_CASE("product-gauss order n is exact for v_z^{2k}, 2k <= 2n-1") {
    const int order = 8;
    const SphereGrid grid = build_grid(SphereScheme::ProductGauss, order);
    for (int k = 0; k <= 7; ++k) {
        const auto r = integrate(grid, [k](const Eigen::Vector3d& v) {
            return std::pow(v.z(), 2 * k);
        });
        const double expected = kFourPi / (2 * k + 1);
        CHECK(std::abs(r.value - expected) <= 1e-12 * expected);
    }
}

TEST_CASE("adaptive integration") {
    SUBCASE("constant integrand converges at the first comparison") {
        const auto r = integrate_adaptive([](const Eigen::Vector3d&) { return 1.0; }, 1e-8);
        CHECK(std::abs(r.value - kFourPi) <= 1e-12);
        CHECK(r.nodes_used == 8 * 16 + 16 * 32); // orders 8 and 16 only
    }

    SUBCASE("matches the prolate closed form (two equal smaller values)") {
        // spectrum (1, 0.5, 0.5): closed form with a = 0.5, c = 1
        const double e = 0.5;
        const double closed =
            0.5 * (1.0 + e * e / std::sqrt(1.0 - e * e) *
                             std::log((1.0 + std::sqrt(1.0 - e * e)) / e));
        const auto r = integrate_adaptive(spectrum_integrand(1.0, 0.5, 0.5), 1e-9);
        CHECK(std::abs(r.value / kFourPi - closed) <= 1e-8);
    }

    SUBCASE("matches the damped-Werner closed form") {
        const double alpha = 0.8, eta = 0.36;
        const double damped = alpha * std::sqrt(1.0 - eta);
        const double closed =
            0.5 * alpha *
            (1.0 + (1.0 - eta) / std::sqrt(eta) *
                       std::log((1.0 + std::sqrt(eta)) / std::sqrt(1.0 - eta)));
        const auto r =
            integrate_adaptive(spectrum_integrand(damped, damped, alpha), 1e-9);
        CHECK(std::abs(r.value / kFourPi - closed) <= 1e-8);
    }

    SUBCASE("reports non-convergence with the best estimate") {
        // spectrum (0, 0, 1): integrand |v_z|, kinked on the equator; the
        // 1e-13 target is unreachable under the order cap
        CHECK_THROWS_AS(integrate_adaptive(spectrum_integrand(0.0, 0.0, 1.0), 1e-13),
                        ConvergenceError);
        try {
            integrate_adaptive(spectrum_integrand(0.0, 0.0, 1.0), 1e-13);
        } catch (const ConvergenceError& e) {
            CHECK(std::abs(e.best().value - 2.0 * M_PI) <= 1e-4);
            CHECK(e.best().estimated_error > 0.0);
        }
    }

    SUBCASE("rejects a non-positive target") {
        CHECK_THROWS_AS(integrate_adaptive([](const Eigen::Vector3d&) { return 1.0; }, 0.0),
                        DomainError);
    }
}

TEST_CASE("rotation invariance of the spectrum integrand") {
    RngStream rng(101);
    for (int i = 0; i < 8; ++i) {
        Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
        t(0, 0) = rng.uniform();
        t(1, 1) = rng.uniform();
        t(2, 2) = rng.uniform();
        const Eigen::Matrix3d rotated =
            t * rotation(rng.unit_vector(), rng.uniform(0.0, M_PI)).transpose();

        const auto plain = integrate_adaptive(
            [&](const Eigen::Vector3d& v) { return (t * v).norm(); }, 1e-10);
        const auto turned = integrate_adaptive(
            [&](const Eigen::Vector3d& v) { return (rotated * v).norm(); }, 1e-10);
        CHECK(std::abs(plain.value - turned.value) <= 1e-8 * std::abs(plain.value) + 1e-10);
    }
}

TEST_CASE("estimated error decreases monotonically under order doubling") {
    // mildly hard spectrum: smooth but slowly converging near the poles
    const auto f = spectrum_integrand(1.0, 0.7, 0.0);
    double previous_value = 0.0;
    double previous_err = 0.0;
    bool first = true;
    for (int order = 8; order <= 256; order *= 2) {
        const SphereGrid grid = build_grid(SphereScheme::ProductGauss, order);
        double value = 0.0;
        for (const auto& node : grid.nodes) value += node.weight * f(node.v);
        if (!first) {
            const double err = std::abs(value - previous_value);
            if (previous_err > 0.0) CHECK(err <= std::max(previous_err, 1e-14));
            previous_err = err;
        }
        previous_value = value;
        first = false;
    }
}

TEST_CASE("subdivision cross-checks product-gauss on a generic spectrum") {
    const auto f = spectrum_integrand(0.9, 0.55, 0.2);
    const auto pg = integrate_adaptive(f, 1e-9);
    const SphereGrid sub = build_grid(SphereScheme::Subdivision, 64);
    const auto sr = integrate(sub, f);
    CHECK(std::abs(pg.value - sr.value) <= 1e-4);
    CHECK(std::abs(pg.value - sr.value) <= 10.0 * sr.estimated_error + 1e-9);
}
