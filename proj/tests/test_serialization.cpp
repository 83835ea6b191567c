#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "steerkit/families.hpp"
#include "steerkit/serialization.hpp"
#include "steerkit/steering.hpp"

using namespace steerkit;

TEST_CASE("density input") {
    // maximally mixed state, 16 [re, im] pairs row-major
    std::string text = R"({"density": [)";
    for (int i = 0; i < 16; ++i) {
        text += (i % 5 == 0) ? "[0.25, 0]" : "[0, 0]";
        if (i != 15) text += ",";
    }
    text += "]}";
    const ParsedState parsed = state_from_json_text(text);
    CHECK(parsed.source == "density");
    CHECK((parsed.rho.matrix() - 0.25 * Eigen::Matrix4cd::Identity())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK_FALSE(parsed.seed.has_value());
}

TEST_CASE("correlation input becomes the matching T state") {
    // literally reconstructible input: T preserved entrywise
    const ParsedState literal = state_from_json_text(
        R"({"correlation": [[0.4, 0, 0], [0, -0.4, 0], [0, 0, 0.4]]})");
    CHECK(literal.source == "correlation");
    const Eigen::Matrix3d t = correlation_matrix(literal.rho).t;
    CHECK((t - Eigen::Vector3d(0.4, -0.4, 0.4).asDiagonal().toDenseMatrix())
              .cwiseAbs()
              .maxCoeff() <= 1e-14);

    // diag(0.4, 0.4, 0.4) has no literal state; the Bell-diagonal
    // representative with the same singular spectrum stands in, so the
    // analysis still reads f = 0.4, unsteerable
    const ParsedState folded = state_from_json_text(
        R"({"correlation": [[0.4, 0, 0], [0, 0.4, 0], [0, 0, 0.4]]})");
    const SteeringReport report = steering_verdict(folded.rho);
    CHECK(report.f_value == 0.4);
    CHECK_FALSE(report.steerable);

    // spectrum violating t1 + t2 - t3 <= 1: no state at all
    CHECK_THROWS_AS(
        state_from_json_text(
            R"({"correlation": [[1, 0, 0], [0, 0.9, 0], [0, 0, 0]]})"),
        InvalidStateError);
}

TEST_CASE("family inputs") {
    const ParsedState w = state_from_json_text(
        R"({"family": {"name": "werner", "params": {"alpha": 0.7}}})");
    CHECK((w.rho.matrix() - werner(0.7).matrix()).cwiseAbs().maxCoeff() == 0.0);

    const ParsedState wpd = state_from_json_text(
        R"({"family": {"name": "werner_pd", "params": {"alpha": 0.8, "eta": 0.36}}})");
    CHECK((wpd.rho.matrix() - werner_pd(0.8, 0.36).matrix()).cwiseAbs().maxCoeff() ==
          0.0);

    const ParsedState bd = state_from_json_text(
        R"({"family": {"name": "bell_diagonal",
                       "params": {"c1": 0.5, "c2": -0.5, "c3": 0.5}}})");
    CHECK((bd.rho.matrix() - werner(0.5).matrix()).cwiseAbs().maxCoeff() <= 1e-15);

    const ParsedState r2 = state_from_json_text(
        R"({"family": {"name": "rank2",
                       "params": {"psi": [[0.92387953251128674, 0], [0, 0],
                                          [0, 0], [0.38268343236508978, 0]]}}})");
    CHECK(is_t_state(r2.rho, 1e-12));

    const ParsedState rt = state_from_json_text(
        R"({"family": {"name": "random_t", "params": {"seed": 42}}})");
    CHECK(rt.seed == 42);
    CHECK(is_t_state(rt.rho, 1e-12));
    const ParsedState rt_again = state_from_json_text(
        R"({"family": {"name": "random_t", "params": {"seed": 42}}})");
    CHECK((rt.rho.matrix() - rt_again.rho.matrix()).cwiseAbs().maxCoeff() == 0.0);

    const ParsedState sep = state_from_json_text(
        R"({"family": {"name": "random_separable",
                       "params": {"n_terms": 3, "seed": 7}}})");
    CHECK(sep.seed == 7);
    CHECK(steering_verdict(sep.rho).f_value <= 0.5 + 1e-7);
}

TEST_CASE("malformed input is rejected with FormatError") {
    CHECK_THROWS_AS(state_from_json_text("not json"), FormatError);
    CHECK_THROWS_AS(state_from_json_text("{}"), FormatError);
    CHECK_THROWS_AS(state_from_json_text(R"({"density": [1, 2]})"), FormatError);
    CHECK_THROWS_AS(state_from_json_text(R"({"correlation": [[2, 0, 0]]})"),
                    FormatError);
    CHECK_THROWS_AS(
        state_from_json_text(R"({"family": {"name": "unknown", "params": {}}})"),
        FormatError);
    CHECK_THROWS_AS(
        state_from_json_text(R"({"family": {"name": "werner", "params": {}}})"),
        FormatError);
    CHECK_THROWS_AS(
        state_from_json_text(
            R"({"family": {"name": "random_t", "params": {"seed": -3}}})"),
        FormatError);

    // parses but is not a state (non-PSD density input)
    std::string bad_density = R"({"density": [)";
    for (int i = 0; i < 16; ++i) {
        if (i == 0)
            bad_density += "[1.5, 0]";
        else if (i == 5)
            bad_density += "[-0.5, 0]";
        else
            bad_density += "[0, 0]";
        if (i != 15) bad_density += ",";
    }
    bad_density += "]}";
    CHECK_THROWS_AS(state_from_json_text(bad_density), InvalidStateError);
}

TEST_CASE("report serialization carries every field") {
    SteeringReport report;
    report.f_value = 0.7;
    report.steerable = true;
    report.concurrence = 0.55;
    report.method = ViolationMethod::Isotropic;
    report.estimated_error = 0.0;

    const std::string text = report_to_json_text(report);
    CHECK(text.find("\"f_value\": 0.7") != std::string::npos);
    CHECK(text.find("\"bound\": 0.5") != std::string::npos);
    CHECK(text.find("\"steerable\": true") != std::string::npos);
    CHECK(text.find("\"method\": \"isotropic\"") != std::string::npos);
    CHECK(text.find("\"rng\"") == std::string::npos);
    CHECK(text.back() == '\n');

    const std::string seeded = report_to_json_text(report, 42);
    CHECK(seeded.find("\"rng\"") != std::string::npos);
    CHECK(seeded.find("\"seed\": 42") != std::string::npos);
    CHECK(seeded.find("mt19937_64/canonical53") != std::string::npos);
}

TEST_CASE("geometry files") {
    const MeasurementGeometry geom =
        geometry_from_json_text("pair", R"([[1, 0, 0], [0, 0, 1]])");
    CHECK(geom.size() == 2);
    CHECK(std::abs(finite_bound(geom) - 1.0 / std::sqrt(2.0)) <= 1e-12);

    CHECK_THROWS_AS(geometry_from_json_text("bad", "[]"), FormatError);
    CHECK_THROWS_AS(geometry_from_json_text("bad", R"([[1, 0]])"), FormatError);
    CHECK_THROWS_AS(geometry_from_json_text("bad", R"([[2, 0, 0]])"), DomainError);
}

TEST_CASE("csv numbers use 12 significant digits") {
    CHECK(format_csv_number(0.5) == "0.5");
    CHECK(format_csv_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_csv_number(0.70710678118654752) == "0.707106781187");
    CHECK(format_csv_number(-1.0) == "-1");
    CHECK(format_csv_number(0.0) == "0");
}
