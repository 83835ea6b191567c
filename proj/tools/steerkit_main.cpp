// steerkit command-line front end.
//
// Subcommands: analyze, sweep, scatter, bounds, verify. All tabular output
// is CSV with a header row and 12-significant-digit numbers; analyze emits a
// JSON report. Exit codes: 0 success, 2 input parse/validation error,
// 3 non-T-state input, 4 quadrature convergence failure, 5 verification
// failure, 1 anything else (I/O, usage).

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "steerkit/entanglement.hpp"
#include "steerkit/families.hpp"
#include "steerkit/parallel.hpp"
#include "steerkit/quantum_state.hpp"
#include "steerkit/random.hpp"
#include "steerkit/serialization.hpp"
#include "steerkit/steering.hpp"
#include "steerkit/verification.hpp"

namespace {

using namespace steerkit;

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kNonTState = 3,
    kConvergenceFailure = 4,
    kVerificationFailure = 5,
};

void emit_error(const std::string& kind, const std::string& message) {
    std::string escaped;
    for (char ch : message) {
        if (ch == '"' || ch == '\\') escaped += '\\';
        if (ch == '\n') {
            escaped += ' ';
            continue;
        }
        escaped += ch;
    }
    std::cerr << "{\"error\": {\"kind\": \"" << kind << "\", \"message\": \""
              << escaped << "\"}}\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path);
}

std::string sibling_path(const std::string& csv_path, const std::string& suffix) {
    const auto dot = csv_path.rfind('.');
    const auto slash = csv_path.find_last_of("/\\");
    const bool has_ext = dot != std::string::npos &&
                         (slash == std::string::npos || dot > slash);
    return (has_ext ? csv_path.substr(0, dot) : csv_path) + suffix;
}

std::string basename_of(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const std::string& input_path, const std::string& output_path,
                double target_rel_err) {
    std::string text;
    try {
        text = read_file(input_path);
    } catch (const std::exception& e) {
        emit_error("io", e.what());
        return kParseError;
    }

    std::optional<ParsedState> state;
    try {
        state = state_from_json_text(text);
    } catch (const FormatError& e) {
        emit_error("parse", e.what());
        return kParseError;
    } catch (const InvalidStateError& e) {
        emit_error("parse", e.what());
        return kParseError;
    } catch (const DomainError& e) {
        emit_error("parse", e.what());
        return kParseError;
    }

    SteeringReport report;
    try {
        report = steering_verdict(state->rho, target_rel_err);
    } catch (const NotTStateError& e) {
        emit_error("non-t-state", e.what());
        return kNonTState;
    } catch (const ConvergenceError& e) {
        emit_error("convergence", e.what());
        return kConvergenceFailure;
    }

    const std::string json = report_to_json_text(report, state->seed);
    if (output_path.empty()) {
        std::cout << json;
    } else {
        try {
            write_file(output_path, json);
        } catch (const std::exception& e) {
            emit_error("io", e.what());
            return kFailure;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// sweep

const char* phase_name(const SteeringReport& report) {
    if (report.steerable) return "steerable";
    return report.concurrence > 0.0 ? "entangled-unsteerable" : "separable";
}

std::string sweep_plot_script(const std::string& csv_name) {
    std::string script = R"PY(#!/usr/bin/env python3
"""Render the damped-Werner phase diagram from a sweep CSV."""
import csv
import math
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

csv_path = sys.argv[1] if len(sys.argv) > 1 else "@CSV@"
alphas, etas, phases = [], [], []
with open(csv_path) as fh:
    for row in csv.DictReader(fh):
        alphas.append(float(row["alpha"]))
        etas.append(float(row["eta"]))
        phases.append(row["phase"])

colors = {"separable": "#f5d9a9", "entangled-unsteerable": "#bdbdbd",
          "steerable": "#cdb4e4"}
fig, ax = plt.subplots(figsize=(6.0, 5.0))
ax.scatter(etas, alphas, c=[colors[p] for p in phases], s=14, marker="s",
           linewidths=0)

etas_line = [i / 400.0 for i in range(1, 400)]
steering = [1.0 / (1.0 + (1.0 - e) / math.sqrt(e)
                   * math.log((1.0 + math.sqrt(e)) / math.sqrt(1.0 - e)))
            for e in etas_line]
entanglement = [1.0 / (1.0 + 2.0 * math.sqrt(1.0 - e)) for e in etas_line]
ax.plot(etas_line, steering, color="tab:blue", lw=2,
        label="steering boundary")
ax.plot(etas_line, entanglement, color="tab:brown", lw=2,
        label="entanglement boundary")
ax.set_xlabel("eta")
ax.set_ylabel("alpha")
ax.set_xlim(0.0, 1.0)
ax.set_ylim(0.0, 1.0)
ax.legend(loc="lower right")
fig.tight_layout()
out_path = csv_path.rsplit(".", 1)[0] + ".png"
fig.savefig(out_path, dpi=160)
print(out_path)
)PY";
    const std::string token = "@CSV@";
    script.replace(script.find(token), token.size(), csv_name);
    return script;
}

int cmd_sweep(const std::string& output_path, int resolution, double target_rel_err,
              int workers) {
    const long rows = static_cast<long>(resolution) * resolution;
    std::vector<SteeringReport> reports(static_cast<std::size_t>(rows));
    std::atomic<long> failures{0};

    parallel_for(rows, workers, [&](long index) {
        const int i = static_cast<int>(index / resolution);
        const int j = static_cast<int>(index % resolution);
        const double alpha = static_cast<double>(i) / (resolution - 1);
        const double eta = static_cast<double>(j) / resolution; // [0, 1)
        try {
            reports[static_cast<std::size_t>(index)] =
                steering_verdict(werner_pd(alpha, eta), target_rel_err);
        } catch (const ConvergenceError&) {
            failures.fetch_add(1);
        }
    });

    std::string csv = "alpha,eta,f_value,concurrence,phase\n";
    for (long index = 0; index < rows; ++index) {
        const int i = static_cast<int>(index / resolution);
        const int j = static_cast<int>(index % resolution);
        const auto& report = reports[static_cast<std::size_t>(index)];
        csv += format_csv_number(static_cast<double>(i) / (resolution - 1));
        csv += ',';
        csv += format_csv_number(static_cast<double>(j) / resolution);
        csv += ',';
        csv += format_csv_number(report.f_value);
        csv += ',';
        csv += format_csv_number(report.concurrence);
        csv += ',';
        csv += phase_name(report);
        csv += '\n';
    }

    try {
        write_file(output_path, csv);
        write_file(sibling_path(output_path, "_plot.py"),
                   sweep_plot_script(basename_of(output_path)));
    } catch (const std::exception& e) {
        emit_error("io", e.what());
        return kFailure;
    }
    std::cout << "sweep: resolution=" << resolution << " rows=" << rows
              << " convergence_failures=" << failures.load() << " out="
              << output_path << "\n";
    return failures.load() == 0 ? kOk : kConvergenceFailure;
}

// ---------------------------------------------------------------------------
// scatter

std::string scatter_plot_script(const std::string& csv_name) {
    std::string script = R"PY(#!/usr/bin/env python3
"""Plot maximum violation against concurrence with the analytic band."""
import csv
import math
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

csv_path = sys.argv[1] if len(sys.argv) > 1 else "@CSV@"
es, fs = [], []
with open(csv_path) as fh:
    for row in csv.DictReader(fh):
        es.append(float(row["concurrence"]))
        fs.append(float(row["f_value"]))


def upper(e):
    if e >= 1.0:
        return 1.0
    s = math.sqrt(1.0 - e * e)
    return 0.5 * (1.0 + e * e / s * math.log((1.0 + s) / e))


grid = [i / 1000.0 for i in range(1, 1001)]
fig, ax = plt.subplots(figsize=(6.0, 5.0))
ax.scatter(es, fs, s=2, color="#777777", alpha=0.35, linewidths=0)
ax.plot(grid, [(1.0 + 2.0 * e) / 3.0 for e in grid], color="tab:brown", lw=2,
        label="lower bound (1 + 2E)/3")
ax.plot(grid, [upper(e) for e in grid], color="tab:blue", lw=2,
        label="upper bound")
ax.axhline(0.5, color="black", lw=1, ls="--", label="steering bound 1/2")
ax.set_xlabel("concurrence E")
ax.set_ylabel("maximum violation F")
ax.set_xlim(0.0, 1.0)
ax.set_ylim(0.0, 1.0)
ax.legend(loc="lower right")
fig.tight_layout()
out_path = csv_path.rsplit(".", 1)[0] + ".png"
fig.savefig(out_path, dpi=160)
print(out_path)
)PY";
    const std::string token = "@CSV@";
    script.replace(script.find(token), token.size(), csv_name);
    return script;
}

int cmd_scatter(const std::string& output_path, long samples, std::uint64_t seed,
                double target_rel_err, int workers) {
    struct Point {
        double e = 0.0;
        double f = 0.0;
        bool converged = false;
    };
    std::vector<Point> points(static_cast<std::size_t>(samples));

    parallel_for(samples, workers, [&](long index) {
        RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(index));
        const BellDiagonalParams params = random_bell_diagonal(rng);
        Point& point = points[static_cast<std::size_t>(index)];
        try {
            const SteeringReport report =
                steering_verdict(bell_diagonal_from_t(params), target_rel_err);
            point.e = report.concurrence;
            point.f = report.f_value;
            point.converged = true;
        } catch (const ConvergenceError&) {
            point.converged = false;
        }
    });

    long convergence_failures = 0;
    long band_violations = 0;
    std::string csv = "concurrence,f_value\n";
    for (const Point& point : points) {
        if (!point.converged) {
            ++convergence_failures;
            continue;
        }
        csv += format_csv_number(point.e);
        csv += ',';
        csv += format_csv_number(point.f);
        csv += '\n';
        if (point.e <= 0.0) {
            if (point.f > 0.5 + 1e-6) ++band_violations;
        } else {
            const auto [lower, upper] = ef_band(point.e);
            if (point.f < lower - 1e-6 || point.f > upper + 1e-6) ++band_violations;
        }
    }

    try {
        write_file(output_path, csv);
        write_file(sibling_path(output_path, "_plot.py"),
                   scatter_plot_script(basename_of(output_path)));
    } catch (const std::exception& e) {
        emit_error("io", e.what());
        return kFailure;
    }
    std::cout << "scatter: samples=" << samples << " seed=" << seed
              << " rng=" << RngStream::algorithm_id
              << " band_violations=" << band_violations
              << " convergence_failures=" << convergence_failures << " out="
              << output_path << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const std::string& output_path,
               const std::vector<std::string>& geometry_files) {
    std::vector<MeasurementGeometry> geometries = geometry_catalog();
    for (const auto& path : geometry_files) {
        std::string name = basename_of(path);
        if (const auto dot = name.rfind('.'); dot != std::string::npos)
            name = name.substr(0, dot);
        geometries.push_back(geometry_from_json_text(name, read_file(path)));
    }

    std::string csv = "geometry,n,c_n\n";
    for (const auto& geom : geometries) {
        csv += geom.name();
        csv += ',';
        csv += std::to_string(geom.size());
        csv += ',';
        csv += format_csv_number(finite_bound(geom));
        csv += '\n';
    }
    csv += "infinite-limit,inf,0.5\n";

    if (output_path.empty()) {
        std::cout << csv;
        return kOk;
    }
    try {
        write_file(output_path, csv);
    } catch (const std::exception& e) {
        emit_error("io", e.what());
        return kFailure;
    }
    std::cout << "bounds: geometries=" << geometries.size() << " out="
              << output_path << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(std::uint64_t seed, const std::string& fault) {
    VerificationConfig config;
    config.seed = seed;
    if (fault == "scaling") config.fault = FaultInjection::ScalingOffset;

    bool all_passed = true;
    for (const SuiteResult& suite : run_verification(config)) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "%s %-26s %d cases, max residual %.3e (tolerance %.1e)",
                      suite.passed ? "PASS" : "FAIL", suite.name.c_str(),
                      suite.cases, suite.max_residual, suite.tolerance);
        std::cout << line << "\n";
        if (!suite.passed) {
            std::cout << "     " << suite.detail << "\n";
            all_passed = false;
        }
    }
    return all_passed ? kOk : kVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit T-state steering analysis"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read option defaults from an INI/TOML file");

    std::string input_path;
    std::string output_path;
    std::uint64_t seed = 1;
    long samples = 50000;
    int resolution = 100;
    double target_rel_err = 0.0; // per-command default applied below
    int workers = default_workers();
    std::vector<std::string> geometry_files;
    std::string fault;

    auto* analyze = app.add_subcommand("analyze", "Steering report for one state");
    analyze->add_option("--in", input_path, "State JSON file")->required();
    analyze->add_option("--out", output_path, "Report JSON path (stdout if omitted)");
    analyze->add_option("--target-rel-err", target_rel_err, "Quadrature target")
        ->check(CLI::Range(1e-15, 1e-2))
        ->default_val(1e-9);

    auto* sweep = app.add_subcommand(
        "sweep", "Phase diagram of the damped Werner family over (alpha, eta)");
    sweep->add_option("--res", resolution, "Grid resolution per axis")
        ->check(CLI::Range(2, 4096))
        ->default_val(100);
    sweep->add_option("--out", output_path, "CSV output path")->required();
    sweep->add_option("--target-rel-err", target_rel_err, "Quadrature target")
        ->check(CLI::Range(1e-15, 1e-2))
        ->default_val(1e-9);
    sweep->add_option("--threads", workers, "Worker threads")
        ->check(CLI::PositiveNumber);

    auto* scatter = app.add_subcommand(
        "scatter", "Concurrence/violation scatter over random T states");
    scatter->add_option("--samples", samples, "Number of sampled states")
        ->check(CLI::PositiveNumber)
        ->default_val(50000);
    scatter->add_option("--seed", seed, "RNG seed")->default_val(1);
    scatter->add_option("--out", output_path, "CSV output path")->required();
    scatter->add_option("--target-rel-err", target_rel_err, "Quadrature target")
        ->check(CLI::Range(1e-15, 1e-2))
        ->default_val(1e-7);
    scatter->add_option("--threads", workers, "Worker threads")
        ->check(CLI::PositiveNumber);

    auto* bounds = app.add_subcommand(
        "bounds", "Finite-measurement cheating bounds for the geometry catalog");
    bounds->add_option("--out", output_path, "CSV output path (stdout if omitted)");
    bounds->add_option("--geometry", geometry_files,
                       "Extra geometry JSON files (list of unit 3-vectors)");

    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--seed", seed, "RNG seed")->default_val(1);
    verify
        ->add_option("--inject-fault", fault,
                     "Test hook: force a suite failure (value: scaling)")
        ->check(CLI::IsMember({"scaling"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(input_path, output_path, target_rel_err);
        if (sweep->parsed())
            return cmd_sweep(output_path, resolution, target_rel_err, workers);
        if (scatter->parsed())
            return cmd_scatter(output_path, samples, seed, target_rel_err, workers);
        if (bounds->parsed()) return cmd_bounds(output_path, geometry_files);
        if (verify->parsed()) return cmd_verify(seed, fault);
    } catch (const FormatError& e) {
        emit_error("parse", e.what());
        return kParseError;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kFailure;
    }
    return kFailure;
}
