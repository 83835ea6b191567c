#include "steerkit/random.hpp"

#include <cmath>
#include <complex>

namespace steerkit {

namespace {

// splitmix64; decorrelates (seed, index) pairs before they seed mt19937_64.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

RngStream RngStream::substream(std::uint64_t seed, std::uint64_t index) {
    return RngStream(mix64(mix64(seed) ^ mix64(index + 0x715b7c4f01e4dd2dULL)));
}

Eigen::Vector3d RngStream::unit_vector() {
    const double z = 1.0 - 2.0 * uniform();
    const double phi = 2.0 * M_PI * uniform();
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {rho * std::cos(phi), rho * std::sin(phi), z};
}

std::vector<double> RngStream::simplex_weights(int n) {
    std::vector<double> w(static_cast<std::size_t>(n));
    double total = 0.0;
    for (auto& wi : w) {
        // -log(1-u) is Exp(1); normalized exponentials are Dirichlet(1,..,1).
        wi = -std::log1p(-uniform());
        total += wi;
    }
    for (auto& wi : w) wi /= total;
    return w;
}

Eigen::Matrix2cd RngStream::random_su2() {
    // Uniform quaternion on S^3 from three uniforms.
    const double u1 = uniform();
    const double u2 = 2.0 * M_PI * uniform();
    const double u3 = 2.0 * M_PI * uniform();
    const double a = std::sqrt(1.0 - u1) * std::sin(u2);
    const double b = std::sqrt(1.0 - u1) * std::cos(u2);
    const double c = std::sqrt(u1) * std::sin(u3);
    const double d = std::sqrt(u1) * std::cos(u3);
    Eigen::Matrix2cd u;
    u << std::complex<double>(a, b), std::complex<double>(c, d),
        std::complex<double>(-c, d), std::complex<double>(a, -b);
    return u;
}

} // namespace steerkit
