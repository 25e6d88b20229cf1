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

#include "qtomo/density.h"
#include "qtomo/measurements.h"

namespace qtomo {

/// Wall-clock seconds spent in each pipeline stage.
struct StageTimings {
    double basis_change = 0.0;
    double eigensystem = 0.0;
    double projection = 0.0;
    double reconstruction = 0.0;

    double total() const { return basis_change + eigensystem + projection + reconstruction; }
};

struct ReconstructionReport {
    DensityMatrix rho;
    ProjectionResult projection;
    /// sum_i (m_i - Tr[sigma_i rho])^2 at the returned state.
    double residual;
    StageTimings timings;
};

/// Maximum-likelihood state for Gaussian noise: assemble mu, then take the
/// nearest density matrix.
ReconstructionReport reconstruct(const MeasurementSet &m);

/// The reconstruction stages that follow the basis change, timed individually.
/// Fills every field of `timings` except `basis_change`.
std::pair<DensityMatrix, ProjectionResult> timed_nearest_density(const CandidateMatrix &mu,
                                                                 StageTimings &timings);

/// Key-value text: support, shift, distance_sq, residual, then timings.
void write_report(std::ostream &out, const ReconstructionReport &report);

struct BaselineOptions {
    std::size_t max_iters = 20000;
    /// Stop once the gradient norm falls to this value. Much below 1e-7 the
    /// Armijo test can no longer resolve the decrease in a double-precision objective.
    double tol = 1e-7;
};

struct BaselineResult {
    DensityMatrix rho;
    double objective;
    std::size_t iterations;
    bool converged;
};

/// Direct minimization of ||mu - rho||^2 over rho = T^dagger T / Tr(T^dagger T)
/// with T complex lower triangular, by gradient descent with backtracking line
/// search from T = identity. Failure to converge is reported, not thrown.
BaselineResult baseline_minimize(const CandidateMatrix &mu, const BaselineOptions &options = {});
BaselineResult baseline_minimize(const MeasurementSet &m, const BaselineOptions &options = {});

}  // namespace qtomo
