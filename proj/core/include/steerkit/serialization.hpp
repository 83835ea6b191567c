#pragma once

#include <optional>
#include <string>

#include "steerkit/quantum_state.hpp"
#include "steerkit/steering.hpp"

namespace steerkit {

/// Where a parsed state came from, for run metadata.
struct ParsedState {
    DensityMatrix rho;
    std::string source;              // "density", "correlation" or family name
    std::optional<std::uint64_t> seed; // present when the family was sampled
};

/// Parses the state file format:
///   {"density": [[re, im], ... 16 entries row-major]}
///   {"correlation": [[...], [...], [...]]}        (3x3 real; T-state rebuild)
///   {"family": {"name": "...", "params": {...}}}
/// Families: werner{alpha}, werner_pd{alpha, eta}, bell_diagonal{c1,c2,c3},
/// rank2{psi: 4 [re, im] pairs}, random_t{seed}, random_separable{n_terms, seed}.
/// Throws FormatError on malformed input and InvalidStateError when the
/// parsed matrix is not a state.
ParsedState state_from_json_text(const std::string& text);

/// SteeringReport as a JSON object text (2-space indent, trailing newline).
/// `rng_seed`, when given, adds an "rng" block recording the generator
/// identifier and seed of the sampled input.
std::string report_to_json_text(const SteeringReport& report,
                                std::optional<std::uint64_t> rng_seed = std::nullopt);

/// Measurement geometry from a JSON list of 3-vectors: [[x,y,z], ...].
MeasurementGeometry geometry_from_json_text(const std::string& name,
                                            const std::string& text);

/// Shortest-of-12-significant-digits decimal used for all CSV payloads.
std::string format_csv_number(double value);

} // namespace steerkit
