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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qtomo/linalg.h"

namespace qtomo {

/// Eigenvalues sorted descending, column k of `vectors` paired with `values[k]`.
struct EigenSpectrum {
    RealVector values;
    Matrix vectors;

    Eigen::Index dimension() const { return values.size(); }
};

/// Hermitian eigendecomposition, re-sorted descending.
///
/// Rejects input whose Hermitian residual exceeds 1e-10 (DataError) and raises
/// NumericalError if the solver does not converge.
EigenSpectrum hermitian_eigensystem(const Matrix &m);

/// Projection of a real spectrum onto {lambda >= 0, sum lambda = target}.
struct ProjectionResult {
    /// Projected values, in the same order as the input.
    std::vector<double> lambdas;
    /// Size of the index set that received the uniform shift. Every index
    /// outside it is exactly zero.
    std::size_t support = 0;
    /// Uniform amount added to each supported input value (L/2 in Lagrange form).
    double shift = 0.0;
    /// sum_i (lambda_i - input_i)^2.
    double distance_sq = 0.0;
};

inline constexpr double kStrictSumTolerance = 1e-6;

/// Euclidean projection of a nonincreasing spectrum onto the probability simplex.
///
/// Walks from the smallest value upward: while mu_i + a/i < 0, zero lambda_i and
/// fold mu_i into the accumulator a; then add a/i to every remaining value. The
/// accumulator starts at (1 - sum mu), which is zero for exactly normalized
/// input and absorbs rounding otherwise.
///
/// Throws DataError for unsorted input or when |sum - 1| > 1e-6 (use
/// normalize_then_project for arbitrary vectors).
ProjectionResult project_to_simplex(std::span<const double> mu);

/// Projection of an arbitrary real vector onto {lambda >= 0, sum lambda = target}.
/// Input order is preserved in the result; `shift` is reported relative to the
/// caller's values. Throws UsageError if target <= 0 or the input is empty.
ProjectionResult normalize_then_project(std::span<const double> x, double target = 1.0);

/// Writes `support`, `shift`, `distance_sq` lines, then one lambda per line,
/// each value printed with 15 significant digits.
void write_projection(std::ostream &out, const ProjectionResult &r);

/// Reads the spectrum format: one real per line, '#' comments, blank lines
/// skipped. Throws DataError with the line number on a bad line, or if no
/// values are present.
std::vector<double> read_spectrum(std::istream &in);

}  // namespace qtomo
