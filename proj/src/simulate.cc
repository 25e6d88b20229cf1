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

#include "qtomo/simulate.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qtomo/errors.h"

namespace qtomo {

namespace {

constexpr std::uint32_t kStateStream = 0;
constexpr std::uint32_t kNoiseStream = 1;

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint32_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream,
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

// Uniform on the open interval (0, 1).
double open_uniform(std::mt19937_64 &engine) {
    return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller, cosine branch only.
double standard_normal(std::mt19937_64 &engine) {
    double u1 = open_uniform(engine);
    double u2 = open_uniform(engine);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Vector random_pure_state(std::size_t num_qubits, std::uint64_t seed) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw UsageError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                         std::to_string(num_qubits));
    }
    const auto d = Eigen::Index{1} << num_qubits;
    auto engine = stream_engine(seed, kStateStream, 0);
    Vector psi(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        double re = standard_normal(engine);
        double im = standard_normal(engine);
        psi(i) = Complex(re, im);
    }
    psi /= psi.norm();
    return psi;
}

DensityMatrix mix_with_identity(const Vector &psi, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError("mixing parameter must lie in [0, 1]");
    }
    if (qubits_for_dimension(psi.size()) < 1) {
        throw UsageError("state vector length must be a power of two >= 2");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw UsageError("state vector is not normalized");
    }
    const Eigen::Index d = psi.size();
    Matrix rho = p * (psi * psi.adjoint());
    rho.diagonal().array() += (1.0 - p) / static_cast<double>(d);
    symmetrize(rho);
    return DensityMatrix(std::move(rho));
}

MeasurementSet exact_measurements(const Matrix &rho0, double variance) {
    int n = qubits_for_dimension(rho0.rows());
    if (n < 1 || rho0.rows() != rho0.cols()) {
        throw DataError("state must be square with dimension a power of two >= 2");
    }
    const auto nq = static_cast<std::size_t>(n);
    const std::uint64_t count = std::uint64_t{1} << (2 * nq);
    std::vector<MeasurementRecord> records;
    records.reserve(count);
    records.push_back({PauliString::from_index(nq, 0), 1.0, 1});
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        PauliString op = PauliString::from_index(nq, idx);
        double mean = real_trace_product(SparsePauliMatrix(op), rho0);
        records.push_back({std::move(op), mean, 1});
    }
    return MeasurementSet(nq, variance, std::move(records));
}

MeasurementSet simulate_measurements(const DensityMatrix &rho0, const NoiseModel &noise) {
    if (!(noise.variance > 0.0) || !std::isfinite(noise.variance)) {
        throw UsageError("noise variance must be positive and finite");
    }
    MeasurementSet exact = exact_measurements(rho0.matrix(), noise.variance);
    const double sigma = std::sqrt(noise.variance);
    std::vector<MeasurementRecord> records = exact.records();
    for (std::size_t idx = 1; idx < records.size(); ++idx) {
        auto engine = stream_engine(noise.seed, kNoiseStream, idx);
        records[idx].mean += sigma * standard_normal(engine);
    }
    return MeasurementSet(exact.num_qubits(), noise.variance, std::move(records));
}

}  // namespace qtomo
