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

#include "qtomo/pauli.h"

#include <cmath>

#include "qtomo/errors.h"

namespace qtomo {

PauliString::PauliString(std::vector<Pauli> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw DataError("Pauli string must act on at least one qubit");
    }
    if (factors_.size() > 31) {
        throw DataError("Pauli string too long: " + std::to_string(factors_.size()) + " qubits");
    }
}

PauliString PauliString::parse(std::string_view label) {
    if (label.empty()) {
        throw DataError("empty Pauli label");
    }
    std::vector<Pauli> factors;
    factors.reserve(label.size());
    for (std::size_t k = 0; k < label.size(); ++k) {
        switch (label[k]) {
            case 'I':
                factors.push_back(Pauli::I);
                break;
            case 'X':
                factors.push_back(Pauli::X);
                break;
            case 'Y':
                factors.push_back(Pauli::Y);
                break;
            case 'Z':
                factors.push_back(Pauli::Z);
                break;
            default:
                throw DataError("invalid character '" + std::string(1, label[k]) + "' at position " +
                                std::to_string(k) + " in Pauli label \"" + std::string(label) + "\"");
        }
    }
    return PauliString(std::move(factors));
}

PauliString PauliString::from_index(std::size_t num_qubits, std::uint64_t index) {
    std::vector<Pauli> factors(num_qubits);
    for (std::size_t k = num_qubits; k-- > 0;) {
        factors[k] = static_cast<Pauli>(index & 3);
        index >>= 2;
    }
    return PauliString(std::move(factors));
}

std::uint64_t PauliString::index() const {
    std::uint64_t idx = 0;
    for (Pauli p : factors_) {
        idx = (idx << 2) | static_cast<std::uint64_t>(p);
    }
    return idx;
}

bool PauliString::is_identity() const {
    for (Pauli p : factors_) {
        if (p != Pauli::I) {
            return false;
        }
    }
    return true;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(factors_.size());
    for (Pauli p : factors_) {
        out.push_back("IXYZ"[static_cast<int>(p)]);
    }
    return out;
}

std::uint64_t PauliString::x_mask() const {
    std::uint64_t mask = 0;
    const std::size_t n = factors_.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (factors_[k] == Pauli::X || factors_[k] == Pauli::Y) {
            mask |= std::uint64_t{1} << (n - 1 - k);
        }
    }
    return mask;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t mask = 0;
    const std::size_t n = factors_.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (factors_[k] == Pauli::Z || factors_[k] == Pauli::Y) {
            mask |= std::uint64_t{1} << (n - 1 - k);
        }
    }
    return mask;
}

std::size_t PauliString::y_count() const {
    std::size_t count = 0;
    for (Pauli p : factors_) {
        count += (p == Pauli::Y);
    }
    return count;
}

Complex phase_value(Phase p) {
    switch (p) {
        case Phase::kPlusOne:
            return {1.0, 0.0};
        case Phase::kPlusI:
            return {0.0, 1.0};
        case Phase::kMinusOne:
            return {-1.0, 0.0};
        case Phase::kMinusI:
            return {0.0, -1.0};
    }
    return {0.0, 0.0};
}

// Row r of Y is -i (-1)^r at column r^1 and Z is (-1)^r at column r. A string
// therefore carries (-i)^{#Y} times the parity of the row bits under Y or Z.
SparsePauliMatrix::SparsePauliMatrix(const PauliString &p)
    : dimension_(p.dimension()),
      x_mask_(p.x_mask()),
      z_mask_(p.z_mask()),
      base_phase_(static_cast<int>((3 * p.y_count()) & 3)) {}

Matrix SparsePauliMatrix::to_dense() const {
    const auto d = static_cast<Eigen::Index>(dimension_);
    Matrix m = Matrix::Zero(d, d);
    for (std::uint64_t r = 0; r < dimension_; ++r) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(column(r))) = value(r);
    }
    return m;
}

Matrix single_pauli_matrix(Pauli p) {
    Matrix m(2, 2);
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

namespace {

// Tr(P rho) = sum_r P(r, c(r)) rho(c(r), r).
Complex sparse_trace_product(const SparsePauliMatrix &sp, const Matrix &state) {
    Complex acc{0.0, 0.0};
    for (std::uint64_t r = 0; r < sp.dimension(); ++r) {
        const auto c = static_cast<Eigen::Index>(sp.column(r));
        acc += sp.value(r) * state(c, static_cast<Eigen::Index>(r));
    }
    return acc;
}

}  // namespace

double real_trace_product(const SparsePauliMatrix &sp, const Matrix &state) {
    return sparse_trace_product(sp, state).real();
}

double pauli_expectation(const PauliString &p, const Matrix &state) {
    const auto d = static_cast<Eigen::Index>(p.dimension());
    if (state.rows() != d || state.cols() != d) {
        throw DataError("dimension mismatch: Pauli string " + p.str() + " has d=" + std::to_string(d) +
                        " but state is " + std::to_string(state.rows()) + "x" +
                        std::to_string(state.cols()));
    }
    Complex value = sparse_trace_product(SparsePauliMatrix(p), state);
    if (std::abs(value.imag()) > 1e-12) {
        throw NumericalError("expectation of " + p.str() + " has imaginary part " +
                             std::to_string(value.imag()) + "; state is not Hermitian");
    }
    return value.real();
}

std::vector<double> all_pauli_expectations(const Matrix &state) {
    int n = qubits_for_dimension(state.rows());
    if (n < 1 || state.rows() != state.cols()) {
        throw DataError("state must be square with dimension a power of two >= 2");
    }
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    std::vector<double> out(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        out[idx] = pauli_expectation(PauliString::from_index(static_cast<std::size_t>(n), idx), state);
    }
    return out;
}

}  // namespace qtomo
