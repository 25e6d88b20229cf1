// Copyright 2026 The qtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtomo/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtomo/benchmark.h"
#include "qtomo/errors.h"
#include "qtomo/reconstruct.h"
#include "qtomo/simulate.h"

namespace qtomo {

namespace {

std::string resolve_output(const std::string &path) {
    const char *dir = std::getenv(kOutputDirEnv);
    std::filesystem::path p(path);
    if (dir != nullptr && *dir != '\0' && p.is_relative()) {
        return (std::filesystem::path(dir) / p).string();
    }
    return path;
}

// Writes through `emit` either to `path` or, when empty, to `fallback`.
template <typename Emit>
void write_output(const std::string &path, std::ostream &fallback, Emit emit) {
    if (path.empty()) {
        emit(fallback);
        return;
    }
    const std::string resolved = resolve_output(path);
    std::ofstream out(resolved, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + resolved + "'");
    }
    emit(out);
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + resolved + "'");
    }
}

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    return in;
}

struct SimulateArgs {
    std::size_t qubits = 0;
    double purity = 0.9;
    double variance = 1e-4;
    std::uint64_t seed = 0;
    std::string out;
};

struct ReconstructArgs {
    std::string in;
    std::string out;
    std::string report;
};

struct ProjectArgs {
    std::string in;
    double target_sum = 1.0;
    std::string out;
};

struct BenchmarkArgs {
    BenchmarkConfig config;
    std::string methods = "projection-only,projection-plus-basis-change,baseline-minimizer";
    std::string csv;
};

void cmd_simulate(const SimulateArgs &a, std::ostream &out) {
    DensityMatrix rho0 = mix_with_identity(random_pure_state(a.qubits, a.seed), a.purity);
    MeasurementSet m = simulate_measurements(rho0, NoiseModel{a.variance, a.seed});
    write_output(a.out, out, [&](std::ostream &os) { write_measurements(os, m); });
}

void cmd_reconstruct(const ReconstructArgs &a, std::ostream &out) {
    auto in = open_input(a.in);
    MeasurementSet m = read_measurements(in);
    ReconstructionReport report = reconstruct(m);
    write_output(a.out, out, [&](std::ostream &os) { write_density(os, report.rho.matrix()); });
    if (!a.report.empty()) {
        write_output(a.report, out, [&](std::ostream &os) { write_report(os, report); });
    }
}

void cmd_project(const ProjectArgs &a, std::ostream &out) {
    auto in = open_input(a.in);
    std::vector<double> values = read_spectrum(in);
    ProjectionResult r = normalize_then_project(values, a.target_sum);
    write_output(a.out, out, [&](std::ostream &os) { write_projection(os, r); });
}

void cmd_benchmark(BenchmarkArgs a, std::ostream &out) {
    a.config.methods.clear();
    std::stringstream ss(a.methods);
    std::string label;
    while (std::getline(ss, label, ',')) {
        if (!label.empty()) {
            a.config.methods.push_back(parse_method(label));
        }
    }
    std::vector<BenchmarkRow> rows = run_benchmark(a.config);
    write_output(a.csv, out, [&](std::ostream &os) { write_benchmark_csv(os, rows); });
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Maximum-likelihood quantum state tomography from Pauli measurements", "qtomo"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Simulate noisy Pauli measurements of a random state");
    simulate->add_option("--qubits", sim.qubits, "Number of qubits")->required()->check(CLI::Range(1, 12));
    simulate->add_option("--purity", sim.purity, "Weight of the pure state mixed with I/d")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--variance", sim.variance, "Gaussian noise variance per expectation value")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
    simulate->add_option("--out", sim.out, "Output measurement file (default: stdout)");

    ReconstructArgs rec;
    auto *reconstruct_cmd = app.add_subcommand("reconstruct", "Maximum-likelihood state from a measurement file");
    reconstruct_cmd->add_option("--in", rec.in, "Input measurement file")->required();
    reconstruct_cmd->add_option("--out", rec.out, "Output density matrix file (default: stdout)");
    reconstruct_cmd->add_option("--report", rec.report, "Write a key-value report to this file");

    ProjectArgs proj;
    auto *project = app.add_subcommand("project", "Nearest probability distribution to a list of reals");
    project->add_option("--in", proj.in, "Spectrum file, one real per line")->required();
    project->add_option("--target-sum", proj.target_sum, "Required sum of the output")->capture_default_str();
    project->add_option("--out", proj.out, "Output file (default: stdout)");

    BenchmarkArgs bench;
    auto *benchmark = app.add_subcommand("benchmark", "Time reconstruction methods against qubit count");
    benchmark->add_option("--min-qubits", bench.config.min_qubits)->capture_default_str();
    benchmark->add_option("--max-qubits", bench.config.max_qubits)->capture_default_str();
    benchmark->add_option("--trials", bench.config.trials)->capture_default_str();
    benchmark->add_option("--methods", bench.methods, "Comma-separated method labels")->capture_default_str();
    benchmark->add_option("--csv", bench.csv, "Output CSV file (default: stdout)");
    benchmark->add_option("--repeats", bench.config.repeats, "Timing repetitions per row (median kept)")
        ->capture_default_str();
    benchmark->add_option("--baseline-max-qubits", bench.config.baseline_max_qubits)->capture_default_str();
    benchmark->add_option("--purity", bench.config.purity)->capture_default_str();
    benchmark->add_option("--variance", bench.config.variance)->capture_default_str();
    benchmark->add_option("--seed", bench.config.seed)->capture_default_str();
    benchmark->add_option("--jobs", bench.config.jobs, "Worker threads")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitCode::kOk);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitCode::kUsage);
    }

    try {
        if (simulate->parsed()) {
            cmd_simulate(sim, out);
        } else if (reconstruct_cmd->parsed()) {
            cmd_reconstruct(rec, out);
        } else if (project->parsed()) {
            cmd_project(proj, out);
        } else if (benchmark->parsed()) {
            cmd_benchmark(bench, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.exit_code());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::kNumerical);
    }
    return static_cast<int>(ExitCode::kOk);
}

}  // namespace qtomo
