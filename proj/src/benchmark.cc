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

#include "qtomo/benchmark.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "qtomo/errors.h"
#include "qtomo/reconstruct.h"
#include "qtomo/simulate.h"
#include "text_format.h"

namespace qtomo {

std::string_view method_label(BenchMethod m) {
    switch (m) {
        case BenchMethod::kProjectionOnly:
            return "projection-only";
        case BenchMethod::kProjectionPlusBasisChange:
            return "projection-plus-basis-change";
        case BenchMethod::kBaselineMinimizer:
            return "baseline-minimizer";
    }
    return "unknown";
}

BenchMethod parse_method(std::string_view label) {
    for (auto m : {BenchMethod::kProjectionOnly, BenchMethod::kProjectionPlusBasisChange,
                   BenchMethod::kBaselineMinimizer}) {
        if (method_label(m) == label) {
            return m;
        }
    }
    throw UsageError("unknown benchmark method '" + std::string(label) +
                     "' (expected projection-only, projection-plus-basis-change or baseline-minimizer)");
}

void validate(const BenchmarkConfig &config) {
    if (config.min_qubits < 1 || config.min_qubits > config.max_qubits || config.max_qubits > 10) {
        throw UsageError("qubit range must satisfy 1 <= min <= max <= 10");
    }
    if (config.trials < 1) {
        throw UsageError("trials must be >= 1");
    }
    if (config.repeats < 1) {
        throw UsageError("repeats must be >= 1");
    }
    if (config.jobs < 1) {
        throw UsageError("jobs must be >= 1");
    }
    if (config.methods.empty()) {
        throw UsageError("at least one method is required");
    }
    if (!(config.purity >= 0.0 && config.purity <= 1.0)) {
        throw UsageError("purity must lie in [0, 1]");
    }
    if (!(config.variance > 0.0)) {
        throw UsageError("variance must be positive");
    }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t cell_seed(std::uint64_t base, std::size_t qubits, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(qubits), static_cast<std::uint32_t>(trial)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

struct Cell {
    BenchMethod method;
    std::size_t qubits;
    std::size_t trial;
};

BenchmarkRow time_once(const Cell &cell, const MeasurementSet &m, const CandidateMatrix &mu) {
    BenchmarkRow row{cell.method, cell.qubits, m.dimension(), cell.trial, 0, 0, 0, 0, 0, true};
    switch (cell.method) {
        case BenchMethod::kProjectionOnly: {
            StageTimings t;
            auto [rho, proj] = timed_nearest_density(mu, t);
            row.t_eig = t.eigensystem;
            row.t_proj = t.projection + t.reconstruction;
            row.t_total = t.total();
            row.objective = hs_distance_sq(mu.matrix(), rho.matrix());
            break;
        }
        case BenchMethod::kProjectionPlusBasisChange: {
            StageTimings t;
            auto t0 = Clock::now();
            CandidateMatrix fresh = assemble_mu_pauli(m);
            t.basis_change = seconds_since(t0);
            auto [rho, proj] = timed_nearest_density(fresh, t);
            row.t_basis = t.basis_change;
            row.t_eig = t.eigensystem;
            row.t_proj = t.projection + t.reconstruction;
            row.t_total = t.total();
            row.objective = hs_distance_sq(fresh.matrix(), rho.matrix());
            break;
        }
        case BenchMethod::kBaselineMinimizer: {
            auto t0 = Clock::now();
            CandidateMatrix fresh = assemble_mu_pauli(m);
            row.t_basis = seconds_since(t0);
            t0 = Clock::now();
            BaselineResult result = baseline_minimize(fresh);
            row.t_proj = seconds_since(t0);
            row.t_total = row.t_basis + row.t_proj;
            row.objective = result.objective;
            row.converged = result.converged;
            break;
        }
    }
    return row;
}

BenchmarkRow run_cell(const Cell &cell, const BenchmarkConfig &config) {
    const std::uint64_t seed = cell_seed(config.seed, cell.qubits, cell.trial);
    DensityMatrix rho0 = mix_with_identity(random_pure_state(cell.qubits, seed), config.purity);
    MeasurementSet m = simulate_measurements(rho0, NoiseModel{config.variance, seed});
    CandidateMatrix mu = assemble_mu_pauli(m);

    std::vector<BenchmarkRow> reps;
    reps.reserve(config.repeats);
    for (std::size_t r = 0; r < config.repeats; ++r) {
        reps.push_back(time_once(cell, m, mu));
    }
    std::sort(reps.begin(), reps.end(),
              [](const BenchmarkRow &a, const BenchmarkRow &b) { return a.t_total < b.t_total; });
    return reps[reps.size() / 2];
}

}  // namespace

std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig &config) {
    validate(config);
    std::vector<Cell> cells;
    for (BenchMethod method : config.methods) {
        for (std::size_t n = config.min_qubits; n <= config.max_qubits; ++n) {
            if (method == BenchMethod::kBaselineMinimizer && n > config.baseline_max_qubits) {
                continue;
            }
            for (std::size_t t = 0; t < config.trials; ++t) {
                cells.push_back({method, n, t});
            }
        }
    }

    std::vector<std::optional<BenchmarkRow>> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                rows[i] = run_cell(cells[i], config);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const std::size_t jobs = std::min(config.jobs, std::max<std::size_t>(cells.size(), 1));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<BenchmarkRow> out;
    out.reserve(rows.size());
    for (auto &r : rows) {
        out.push_back(*r);
    }
    return out;
}

void write_benchmark_csv(std::ostream &out, std::span<const BenchmarkRow> rows) {
    out << kBenchmarkHeader << '\n';
    auto g = [](double v) { return internal::format_double(v, 9); };
    for (const auto &r : rows) {
        out << method_label(r.method) << ',' << r.qubits << ',' << r.dimension << ',' << r.trial << ','
            << g(r.t_basis) << ',' << g(r.t_eig) << ',' << g(r.t_proj) << ',' << g(r.t_total) << ','
            << internal::format_double(r.objective, 17) << ',' << (r.converged ? 1 : 0) << '\n';
    }
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw UsageError("slope fit needs at least two paired points");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw DataError("log-log fit needs positive values");
        }
        double lx = std::log(x[i]);
        double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw DataError("slope fit needs at least two distinct x values");
    }
    return (n * sxy - sx * sy) / denom;
}

}  // namespace qtomo
