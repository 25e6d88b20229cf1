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
#include <string>
#include <string_view>
#include <vector>

#include "qtomo/linalg.h"

namespace qtomo {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// A tensor product of single-qubit Pauli operators, e.g. "XIZ".
///
/// Qubit 0 is the leftmost factor and acts on the most significant bit of the
/// computational-basis index. Strings order lexicographically with I < X < Y < Z,
/// which is also the order of `index()`.
class PauliString {
   public:
    explicit PauliString(std::vector<Pauli> factors);

    /// Parses a label over {I,X,Y,Z}. Throws DataError naming the first bad position.
    static PauliString parse(std::string_view label);

    /// Inverse of `index()`.
    static PauliString from_index(std::size_t num_qubits, std::uint64_t index);

    std::size_t num_qubits() const { return factors_.size(); }
    std::size_t dimension() const { return std::size_t{1} << factors_.size(); }
    const std::vector<Pauli> &factors() const { return factors_; }

    /// Position in the lexicographic enumeration of all 4^n strings.
    std::uint64_t index() const;
    bool is_identity() const;
    std::string str() const;

    /// Bits set where the factor flips the basis state (X or Y).
    std::uint64_t x_mask() const;
    /// Bits set where the factor carries a sign (Z or Y).
    std::uint64_t z_mask() const;
    std::size_t y_count() const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::vector<Pauli> factors_;
};

/// Unit phases a Pauli string can carry on a matrix entry.
enum class Phase : std::uint8_t { kPlusOne = 0, kPlusI = 1, kMinusOne = 2, kMinusI = 3 };

Complex phase_value(Phase p);

/// Permutation-plus-phase form of a Pauli string: row r has its only nonzero
/// entry at column `column(r)` with value `phase(r)`.
class SparsePauliMatrix {
   public:
    explicit SparsePauliMatrix(const PauliString &p);

    std::size_t dimension() const { return dimension_; }
    std::uint64_t column(std::uint64_t row) const { return row ^ x_mask_; }
    Phase phase(std::uint64_t row) const {
        int parity = __builtin_popcountll(row & z_mask_) & 1;
        return static_cast<Phase>((base_phase_ + 2 * parity) & 3);
    }
    Complex value(std::uint64_t row) const { return phase_value(phase(row)); }

    Matrix to_dense() const;

   private:
    std::size_t dimension_;
    std::uint64_t x_mask_;
    std::uint64_t z_mask_;
    // Power of i contributed by the Y factors: (-i)^{#Y}.
    int base_phase_;
};

/// The 2x2 matrix for a single factor.
Matrix single_pauli_matrix(Pauli p);

/// Tr(p * state), evaluated through the sparse form in O(d).
/// Throws DataError on a dimension mismatch and NumericalError if the
/// imaginary part exceeds 1e-12.
double pauli_expectation(const PauliString &p, const Matrix &state);

/// Real part of Tr(sp * state) with no dimension or Hermiticity checks.
double real_trace_product(const SparsePauliMatrix &sp, const Matrix &state);

/// Tr(p * state) for every one of the 4^n Pauli strings, in index order.
std::vector<double> all_pauli_expectations(const Matrix &state);

}  // namespace qtomo
