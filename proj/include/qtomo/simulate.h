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

#include <cstdint>

#include "qtomo/density.h"
#include "qtomo/measurements.h"

namespace qtomo {

/// Gaussian noise on each averaged expectation value.
///
/// Random draws come from std::mt19937_64 seeded through std::seed_seq with
/// (seed, stream, operator index), so each operator owns a fixed stream and
/// results do not depend on evaluation order. Normals use Box-Muller on
/// 53-bit uniforms taken directly from the engine output.
struct NoiseModel {
    double variance = 1e-4;
    std::uint64_t seed = 0;
};

/// Haar-random pure state on n qubits (1 <= n <= 12): d independent standard
/// complex Gaussians, normalized.
Vector random_pure_state(std::size_t num_qubits, std::uint64_t seed);

/// p |psi><psi| + (1 - p) I/d. Requires 0 <= p <= 1 and a unit vector (1e-10).
DensityMatrix mix_with_identity(const Vector &psi, double p);

/// Noisy Pauli expectation values of `rho0`. The identity record is fixed to 1
/// and receives no noise; every record has shots = 1.
MeasurementSet simulate_measurements(const DensityMatrix &rho0, const NoiseModel &noise);

/// Exact (noiseless) expectation values of `rho0` packaged as a MeasurementSet.
/// `variance` only fills in the header.
MeasurementSet exact_measurements(const Matrix &rho0, double variance = 1e-4);

}  // namespace qtomo
