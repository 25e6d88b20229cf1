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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qtomo {

enum class BenchMethod { kProjectionOnly, kProjectionPlusBasisChange, kBaselineMinimizer };

std::string_view method_label(BenchMethod m);
/// Throws UsageError for an unknown label.
BenchMethod parse_method(std::string_view label);

struct BenchmarkRow {
    BenchMethod method;
    std::size_t qubits;
    std::size_t dimension;
    std::size_t trial;
    double t_basis;
    double t_eig;
    double t_proj;
    double t_total;
    double objective;
    bool converged = true;
};

struct BenchmarkConfig {
    std::size_t min_qubits = 1;
    std::size_t max_qubits = 8;
    std::size_t trials = 5;
    std::vector<BenchMethod> methods{BenchMethod::kProjectionOnly,
                                     BenchMethod::kProjectionPlusBasisChange,
                                     BenchMethod::kBaselineMinimizer};
    /// Baseline rows are skipped above this size.
    std::size_t baseline_max_qubits = 5;
    /// Timing repetitions per row; the row stores the median.
    std::size_t repeats = 3;
    double purity = 0.9;
    double variance = 1e-4;
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
};

/// Validates ranges; throws UsageError.
void validate(const BenchmarkConfig &config);

/// Runs every (method, size, trial) cell. Trial t at size n uses a seed derived
/// only from (config.seed, n, t), so results do not depend on `jobs`. Rows are
/// ordered by method, then size, then trial.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig &config);

inline constexpr std::string_view kBenchmarkHeader =
    "method,qubits,d,trial,t_basis,t_eig,t_proj,t_total,objective,converged";

void write_benchmark_csv(std::ostream &out, std::span<const BenchmarkRow> rows);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace qtomo
