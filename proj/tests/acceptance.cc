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

// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.
// Usage: qtomo_acceptance [criterion ...]   (no arguments runs everything)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtomo/benchmark.h"
#include "qtomo/cli.h"
#include "qtomo/oracle.h"
#include "qtomo/reconstruct.h"
#include "qtomo/simulate.h"
#include "test_util.h"

using namespace qtomo;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

const std::vector<double> kWorkedExample{3.0 / 5, 1.0 / 2, 7.0 / 20, 1.0 / 10, -11.0 / 20};

Outcome worked_example() {
    ProjectionResult r = project_to_simplex(kWorkedExample);
    const std::vector<double> expected{9.0 / 20, 7.0 / 20, 1.0 / 5, 0.0, 0.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        worst = std::max(worst, std::abs(r.lambdas[i] - expected[i]));
    }
    double shift_err = std::abs(r.shift - (-3.0 / 20));
    bool pass = worst <= 1e-15 && shift_err <= 1e-15 && r.support == 3;
    return {pass, "max |lambda - expected| = " + fmt("%.3g", worst) + ", support " + std::to_string(r.support) +
                      ", |shift + 3/20| = " + fmt("%.3g", shift_err) + " (tol 1e-15)"};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(20260101);
    const int trials = 11000;
    int matched = 0;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 11);
        auto mu = test_util::random_sorted_trace_one(d, rng, -2.0, 2.0);
        ProjectionResult fast = project_to_simplex(mu);
        ProjectionResult slow = oracle_subset_search(mu);
        double err = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            err = std::max(err, std::abs(fast.lambdas[i] - slow.lambdas[i]));
        }
        worst = std::max(worst, err);
        matched += (err <= 1e-12);
    }
    return {matched == trials, std::to_string(matched) + "/" + std::to_string(trials) +
                                   " trials (d = 2..12) within 1e-12; worst " + fmt("%.3g", worst)};
}

Outcome noiseless_roundtrip() {
    int total = 0;
    int ok = 0;
    double worst = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (double p : {0.0, 0.5, 1.0}) {
            for (std::uint64_t s = 0; s < 50; ++s) {
                DensityMatrix rho0 = mix_with_identity(random_pure_state(n, 1000 * n + s), p);
                ReconstructionReport r = reconstruct(exact_measurements(rho0.matrix()));
                double err = std::sqrt(hs_distance_sq(r.rho.matrix(), rho0.matrix()));
                worst = std::max(worst, err);
                ok += (err <= 1e-9);
                ++total;
            }
        }
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " states with ||rho - rho0||_2 <= 1e-9; worst " +
                             fmt("%.3g", worst)};
}

struct IdentitySample {
    double residual;
    double hs;
    double d;
};

std::vector<IdentitySample> identity_samples() {
    std::mt19937_64 rng(77);
    std::normal_distribution<double> noise(0.0, 0.3);
    std::vector<IdentitySample> out;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
        const auto d = Eigen::Index{1} << n;
        std::vector<MeasurementRecord> records;
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
            records.push_back({PauliString::from_index(n, idx), idx == 0 ? 1.0 : noise(rng), 1});
        }
        MeasurementSet m(n, 0.09, std::move(records));
        Matrix rho = test_util::random_density(d, rng);
        out.push_back({residual_objective(m, rho), hs_distance_sq(assemble_mu_pauli(m).matrix(), rho),
                       static_cast<double>(d)});
    }
    return out;
}

// As stated: residual * d == ||mu - rho||^2.
Outcome residual_identity() {
    int ok = 0;
    double min_ratio = 1e300;
    double max_ratio = 0.0;
    auto samples = identity_samples();
    for (const auto &s : samples) {
        double lhs = s.residual * s.d;
        ok += std::abs(lhs - s.hs) <= 1e-9 * std::max(std::abs(s.hs), 1e-300);
        double ratio = lhs / s.hs / (s.d * s.d);
        min_ratio = std::min(min_ratio, ratio);
        max_ratio = std::max(max_ratio, ratio);
    }
    return {ok == static_cast<int>(samples.size()),
            std::to_string(ok) + "/" + std::to_string(samples.size()) +
                " pairs satisfy residual*d == ||mu-rho||^2 to 1e-9 relative; observed (residual*d)/||mu-rho||^2 / d^2 in [" +
                fmt("%.12g", min_ratio) + ", " + fmt("%.12g", max_ratio) + "]"};
}

// Same pairs, with mu = (1/d) sum m_i sigma_i: residual == d * ||mu - rho||^2.
Outcome residual_identity_d_scaled() {
    int ok = 0;
    double worst = 0.0;
    auto samples = identity_samples();
    for (const auto &s : samples) {
        double rel = std::abs(s.residual - s.d * s.hs) / std::max(s.d * s.hs, 1e-300);
        worst = std::max(worst, rel);
        ok += rel <= 1e-9;
    }
    return {ok == static_cast<int>(samples.size()),
            "supplementary: " + std::to_string(ok) + "/" + std::to_string(samples.size()) +
                " pairs satisfy residual == d*||mu-rho||^2; worst relative error " + fmt("%.3g", worst)};
}

Matrix clip_and_renormalize(const Matrix &mu) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(mu);
    RealVector vals = es.eigenvalues().cwiseMax(0.0);
    vals /= vals.sum();
    Matrix out = es.eigenvectors() * vals.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    return (out + out.adjoint()) * 0.5;
}

Outcome ml_dominance() {
    // Residuals are compared at double-precision resolution: when mu is already
    // PSD every candidate reproduces the d^2 means and residuals are ~1e-30.
    constexpr double kFloor = 1e-12;
    int ok = 0;
    int nonphysical = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        const auto seed = static_cast<std::uint64_t>(5000 + t);
        DensityMatrix rho0 = mix_with_identity(random_pure_state(3, seed), 0.9);
        MeasurementSet m = simulate_measurements(rho0, NoiseModel{1e-4, seed});
        ReconstructionReport r = reconstruct(m);
        Matrix mu = assemble_mu_pauli(m).matrix();
        nonphysical += (r.projection.support < 8);
        bool good = r.residual <= residual_objective(m, rho0.matrix()) + kFloor &&
                    r.residual <= residual_objective(m, clip_and_renormalize(mu)) + kFloor &&
                    r.residual <= residual_objective(m, Matrix::Identity(8, 8) / 8.0) + kFloor;
        ok += good;
    }
    return {ok == trials, std::to_string(ok) + "/" + std::to_string(trials) +
                              " trials dominate rho0, clip-renormalized mu and I/d (" + std::to_string(nonphysical) +
                              " with negative candidate eigenvalues)"};
}

Outcome solver_agreement() {
    std::mt19937_64 rng(4242);
    int agree = 0;
    int converged = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        CandidateMatrix mu(test_util::random_candidate(4, rng, 0.3));
        auto [rho, proj] = nearest_density(mu);
        BaselineResult base = baseline_minimize(mu);
        converged += base.converged;
        agree += base.converged && std::abs(base.objective - proj.distance_sq) <= 1e-6;
    }
    return {agree >= 95, std::to_string(agree) + "/" + std::to_string(trials) +
                             " candidates agree within 1e-6 (need >= 95); " + std::to_string(converged) + " converged"};
}

Outcome scaling() {
    // Single full 8-qubit reconstruction, wall clock including the basis change.
    DensityMatrix rho0 = mix_with_identity(random_pure_state(8, 8), 0.9);
    MeasurementSet m = simulate_measurements(rho0, NoiseModel{1e-4, 8});
    auto t0 = std::chrono::steady_clock::now();
    ReconstructionReport r = reconstruct(m);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    BenchmarkConfig config;
    config.min_qubits = 5;
    config.max_qubits = 8;
    config.trials = 3;
    config.repeats = 3;
    config.methods = {BenchMethod::kProjectionPlusBasisChange};
    auto rows = run_benchmark(config);
    std::vector<double> dims;
    std::vector<double> times;
    std::string per_size;
    for (std::size_t n = 5; n <= 8; ++n) {
        std::vector<double> t;
        for (const auto &row : rows) {
            if (row.qubits == n) {
                t.push_back(row.t_total);
            }
        }
        std::sort(t.begin(), t.end());
        dims.push_back(static_cast<double>(std::size_t{1} << n));
        times.push_back(t[t.size() / 2]);
        per_size += " d=" + std::to_string(std::size_t{1} << n) + ":" + fmt("%.3g", times.back()) + "s";
    }
    double slope = loglog_slope(dims, times);
    bool pass = wall <= 60.0 && slope >= 2.5 && slope <= 4.2;
    return {pass, "8-qubit reconstruction " + fmt("%.3f", wall) + " s (limit 60 s, residual " +
                      fmt("%.3g", r.residual) + "); log-log slope " + fmt("%.3f", slope) + " (need [2.5, 4.2]);" +
                      per_size};
}

Outcome classical_mode() {
    const std::string path = "qtomo_acceptance_spectrum.txt";
    {
        std::FILE *f = std::fopen(path.c_str(), "w");
        if (f == nullptr) {
            return {false, "cannot write temporary spectrum file"};
        }
        std::fputs("0.6\n0.5\n0.35\n0.1\n-0.55\n", f);
        std::fclose(f);
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli({"project", "--in", path}, out, err);
    std::remove(path.c_str());
    const std::string expected = "support 3\nshift -0.15\ndistance_sq 0.38\n0.45\n0.35\n0.2\n0\n0\n";
    bool pass = code == 0 && out.str() == expected;
    return {pass, pass ? "byte-exact: " + std::to_string(expected.size()) + " bytes"
                       : "exit " + std::to_string(code) + ", got:\n" + out.str() + err.str()};
}

struct Criterion {
    const char *name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> criteria{
        {"worked_example", worked_example},
        {"oracle_equivalence", oracle_equivalence},
        {"noiseless_roundtrip", noiseless_roundtrip},
        {"residual_identity", residual_identity},
        {"residual_identity_d_scaled", residual_identity_d_scaled},
        {"ml_dominance", ml_dominance},
        {"solver_agreement", solver_agreement},
        {"scaling", scaling},
        {"classical_mode", classical_mode},
    };
    std::vector<std::string> selected(argv + 1, argv + argc);
    for (const auto &name : selected) {
        bool known = std::any_of(criteria.begin(), criteria.end(), [&](const Criterion &c) { return name == c.name; });
        if (!known) {
            std::fprintf(stderr, "unknown criterion '%s'\n", name.c_str());
            return 2;
        }
    }
    int failures = 0;
    for (const auto &c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.name) == selected.end()) {
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
