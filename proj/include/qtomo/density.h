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

#include <iosfwd>
#include <string>
#include <utility>

#include "qtomo/basis.h"
#include "qtomo/measurements.h"
#include "qtomo/spectral.h"

namespace qtomo {

/// Trace-one Hermitian positive-semidefinite matrix.
///
/// Construction checks Hermiticity (1e-12) and trace (1e-10). Positivity costs
/// an eigendecomposition and is checked by `validate_positive()` or by
/// `read_density`.
class DensityMatrix {
   public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-10;
    static constexpr double kEigenvalueFloor = -1e-12;

    explicit DensityMatrix(Matrix m);

    Eigen::Index dimension() const { return m_.rows(); }
    const Matrix &matrix() const { return m_; }

    double min_eigenvalue() const;
    /// Throws DataError if the smallest eigenvalue is below -1e-12.
    void validate_positive() const;

   private:
    Matrix m_;
};

/// Nearest density matrix to `mu` in the Hilbert-Schmidt norm: eigendecompose,
/// project the spectrum onto the simplex, and rebuild from the supported
/// eigenvectors.
std::pair<DensityMatrix, ProjectionResult> nearest_density(const CandidateMatrix &mu);

/// sum_k lambda_k |v_k><v_k| over the support of `projection`, symmetrized.
Matrix rebuild_from_spectrum(const EigenSpectrum &spectrum, const ProjectionResult &projection);

/// sum_ij |A_ij - B_ij|^2 with compensated summation.
double hs_distance_sq(const Matrix &a, const Matrix &b);

/// sum_i (m_i - Tr[sigma_i rho])^2 over all records.
///
/// With mu = assemble_mu_pauli(m) this equals d * hs_distance_sq(mu, rho).
double residual_objective(const MeasurementSet &m, const Matrix &rho);

/// Density matrix text format: "dim <d>" then d rows of "re,im" entries.
/// Values use 17 significant digits so parsing reproduces them exactly.
void write_density(std::ostream &out, const Matrix &rho);
void write_density_file(const std::string &path, const Matrix &rho);
/// Parses and fully validates (including positivity).
DensityMatrix read_density(std::istream &in);
DensityMatrix read_density_file(const std::string &path);

}  // namespace qtomo
