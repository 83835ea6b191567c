#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

namespace steerkit {

/// Seeded random stream for reproducible experiments.
///
/// The generator is mt19937_64 and every draw goes through the explicit
/// 53-bit mapping (x >> 11) * 2^-53, so a given (seed, stream) pair produces
/// the same sequence on every platform. Bulk runs derive one stream per work
/// item with `substream`, which makes output independent of how the work is
/// sharded across threads.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    /// Stream for work item `index` of a run seeded with `seed`.
    static RngStream substream(std::uint64_t seed, std::uint64_t index);

    /// Identifier recorded in outputs that carry sampled data.
    static constexpr const char* algorithm_id = "mt19937_64/canonical53";

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniformly distributed point on the unit sphere.
    Eigen::Vector3d unit_vector();

    /// Weights uniform on the (n-1)-simplex, i.e. Dirichlet(1,...,1).
    std::vector<double> simplex_weights(int n);

    /// Haar-random SU(2) element.
    Eigen::Matrix2cd random_su2();

private:
    std::mt19937_64 gen_;
};

} // namespace steerkit
