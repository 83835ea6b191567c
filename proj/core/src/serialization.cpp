#include "steerkit/serialization.hpp"

#include <cstdio>

#include <json.hpp>

#include "steerkit/families.hpp"
#include "steerkit/random.hpp"

namespace steerkit {

namespace {

using nlohmann::json;

std::complex<double> complex_from(const json& pair, const char* where) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
        throw FormatError(std::string(where) + ": complex entries must be [re, im]");
    return {pair[0].get<double>(), pair[1].get<double>()};
}

DensityMatrix density_from(const json& entries) {
    if (!entries.is_array() || entries.size() != 16)
        throw FormatError("\"density\" must hold 16 [re, im] pairs, row-major");
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m(i, j) = complex_from(entries[4 * i + j], "\"density\"");
    DensityMatrix rho(m);
    ensure_valid(rho);
    return rho;
}

CorrelationMatrix correlation_from(const json& rows) {
    if (!rows.is_array() || rows.size() != 3)
        throw FormatError("\"correlation\" must be a 3x3 real array");
    CorrelationMatrix t;
    for (int i = 0; i < 3; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 3)
            throw FormatError("\"correlation\" must be a 3x3 real array");
        for (int j = 0; j < 3; ++j) {
            if (!rows[i][j].is_number())
                throw FormatError("\"correlation\" entries must be numbers");
            t.t(i, j) = rows[i][j].get<double>();
            if (std::abs(t.t(i, j)) > 1.0 + 1e-12)
                throw FormatError("\"correlation\" entries must lie in [-1, 1]");
        }
    }
    return t;
}

double param_number(const json& params, const char* key, const char* family) {
    if (!params.contains(key) || !params[key].is_number())
        throw FormatError(std::string("family \"") + family +
                          "\" needs numeric parameter \"" + key + "\"");
    return params[key].get<double>();
}

std::uint64_t param_seed(const json& params, const char* family) {
    if (!params.contains("seed") || !params["seed"].is_number_unsigned())
        throw FormatError(std::string("family \"") + family +
                          "\" needs unsigned integer parameter \"seed\"");
    return params["seed"].get<std::uint64_t>();
}

ParsedState family_from(const json& family) {
    if (!family.contains("name") || !family["name"].is_string())
        throw FormatError("\"family\" needs a string \"name\"");
    const std::string name = family["name"].get<std::string>();
    const json params = family.value("params", json::object());

    if (name == "werner")
        return {werner(param_number(params, "alpha", "werner")), name, std::nullopt};
    if (name == "werner_pd")
        return {werner_pd(param_number(params, "alpha", "werner_pd"),
                          param_number(params, "eta", "werner_pd")),
                name, std::nullopt};
    if (name == "bell_diagonal")
        return {bell_diagonal_from_t({param_number(params, "c1", "bell_diagonal"),
                                      param_number(params, "c2", "bell_diagonal"),
                                      param_number(params, "c3", "bell_diagonal")}),
                name, std::nullopt};
    if (name == "rank2") {
        if (!params.contains("psi") || !params["psi"].is_array() ||
            params["psi"].size() != 4)
            throw FormatError("family \"rank2\" needs \"psi\": 4 [re, im] pairs");
        Eigen::Vector4cd psi;
        for (int i = 0; i < 4; ++i)
            psi(i) = complex_from(params["psi"][i], "\"psi\"");
        return {rank2_t_state(psi), name, std::nullopt};
    }
    if (name == "random_t") {
        const std::uint64_t seed = param_seed(params, "random_t");
        RngStream rng(seed);
        return {bell_diagonal_from_t(random_bell_diagonal(rng)), name, seed};
    }
    if (name == "random_separable") {
        const std::uint64_t seed = param_seed(params, "random_separable");
        const double n = param_number(params, "n_terms", "random_separable");
        if (n < 1 || n != std::floor(n))
            throw FormatError("family \"random_separable\": n_terms must be a "
                              "positive integer");
        RngStream rng(seed);
        return {random_separable_t(static_cast<int>(n), rng).second, name, seed};
    }
    throw FormatError("unknown family \"" + name + "\"");
}

} // namespace

ParsedState state_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw FormatError("state file must be a JSON object");
    if (doc.contains("density"))
        return {density_from(doc["density"]), "density", std::nullopt};
    if (doc.contains("correlation"))
        return {t_state_from_correlation(correlation_from(doc["correlation"])),
                "correlation", std::nullopt};
    if (doc.contains("family")) return family_from(doc["family"]);
    throw FormatError(
        "state file needs one of \"density\", \"correlation\" or \"family\"");
}

std::string report_to_json_text(const SteeringReport& report,
                                std::optional<std::uint64_t> rng_seed) {
    json doc;
    doc["f_value"] = report.f_value;
    doc["bound"] = report.bound;
    doc["steerable"] = report.steerable;
    doc["concurrence"] = report.concurrence;
    doc["method"] = to_string(report.method);
    doc["estimated_error"] = report.estimated_error;
    if (rng_seed) {
        doc["rng"] = {{"algorithm", RngStream::algorithm_id}, {"seed", *rng_seed}};
    }
    return doc.dump(2) + "\n";
}

MeasurementGeometry geometry_from_json_text(const std::string& name,
                                            const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("geometry file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty())
        throw FormatError("geometry file must be a non-empty JSON list of 3-vectors");
    std::vector<Eigen::Vector3d> axes;
    axes.reserve(doc.size());
    for (const auto& row : doc) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
            !row[1].is_number() || !row[2].is_number())
            throw FormatError("geometry entries must be [x, y, z] numbers");
        axes.emplace_back(row[0].get<double>(), row[1].get<double>(),
                          row[2].get<double>());
    }
    return {name, std::move(axes)};
}

std::string format_csv_number(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

} // namespace steerkit
