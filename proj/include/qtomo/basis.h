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

#include <span>
#include <vector>

#include "qtomo/linalg.h"
#include "qtomo/measurements.h"

namespace qtomo {

/// Trace-one Hermitian matrix assembled from measurement data. It may have
/// negative eigenvalues.
class CandidateMatrix {
   public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-9;

    /// Checks Hermiticity and unit trace; throws DataError otherwise.
    explicit CandidateMatrix(Matrix m);

    Eigen::Index dimension() const { return m_.rows(); }
    const Matrix &matrix() const { return m_; }

   private:
    Matrix m_;
};

/// mu = (1/d) sum_i m_i sigma_i, accumulated through the sparse Pauli form in
/// O(d^3) total work. The result is symmetrized before validation.
CandidateMatrix assemble_mu_pauli(const MeasurementSet &m);

/// Same formula for an arbitrary trace-orthonormal Hermitian basis, by dense
/// accumulation in O(d^4). Throws DataError if the basis is not orthonormal
/// (residual above 1e-9), naming the worst pair.
CandidateMatrix assemble_mu_general(std::span<const Matrix> basis, std::span<const double> means);

struct OrthonormalityReport {
    double max_residual = 0.0;
    std::size_t worst_i = 0;
    std::size_t worst_j = 0;
};

/// max_{ij} |Tr[b_i b_j] - d delta_ij| and the pair attaining it.
/// Throws DataError on mixed or non-square dimensions.
OrthonormalityReport orthonormality_report(std::span<const Matrix> basis);

inline double verify_orthonormal(std::span<const Matrix> basis) {
    return orthonormality_report(basis).max_residual;
}

/// Dense expansions of all 4^n Pauli strings in index order.
std::vector<Matrix> dense_pauli_basis(std::size_t num_qubits);

}  // namespace qtomo
