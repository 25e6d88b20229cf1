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

#include "qtomo/basis.h"

#include <cmath>

#include "qtomo/errors.h"
#include "text_format.h"

namespace qtomo {

CandidateMatrix::CandidateMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw DataError("candidate matrix must be square and nonempty");
    }
    double herm = max_hermitian_residual(m_);
    if (herm > kHermitianTolerance) {
        throw DataError("candidate matrix is not Hermitian (residual " + internal::format_double(herm, 3) + ")");
    }
    Complex tr = m_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
        throw DataError("candidate matrix trace is " + internal::format_double(tr.real(), 17) +
                        ", expected 1");
    }
}

CandidateMatrix assemble_mu_pauli(const MeasurementSet &m) {
    const std::size_t d = m.dimension();
    const auto di = static_cast<Eigen::Index>(d);
    Matrix mu = Matrix::Zero(di, di);
    Complex *data = mu.data();
    const double inv_d = 1.0 / static_cast<double>(d);
    for (const auto &rec : m.records()) {
        const SparsePauliMatrix sp(rec.op);
        const double w = rec.mean * inv_d;
        for (std::uint64_t r = 0; r < d; ++r) {
            Complex &entry = data[r + sp.column(r) * d];
            switch (sp.phase(r)) {
                case Phase::kPlusOne:
                    entry.real(entry.real() + w);
                    break;
                case Phase::kMinusOne:
                    entry.real(entry.real() - w);
                    break;
                case Phase::kPlusI:
                    entry.imag(entry.imag() + w);
                    break;
                case Phase::kMinusI:
                    entry.imag(entry.imag() - w);
                    break;
            }
        }
    }
    symmetrize(mu);
    return CandidateMatrix(std::move(mu));
}

OrthonormalityReport orthonormality_report(std::span<const Matrix> basis) {
    OrthonormalityReport report;
    if (basis.empty()) {
        return report;
    }
    const Eigen::Index d = basis.front().rows();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].rows() != d || basis[i].cols() != d) {
            throw DataError("basis element " + std::to_string(i) + " is " + std::to_string(basis[i].rows()) +
                            "x" + std::to_string(basis[i].cols()) + ", expected " + std::to_string(d) + "x" +
                            std::to_string(d));
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            // Tr[A B] = sum_kl A(k,l) B(l,k)
            Complex tr = basis[i].cwiseProduct(basis[j].transpose()).sum();
            double expected = (i == j) ? static_cast<double>(d) : 0.0;
            double res = std::abs(tr - expected);
            if (res > report.max_residual) {
                report = {res, i, j};
            }
        }
    }
    return report;
}

CandidateMatrix assemble_mu_general(std::span<const Matrix> basis, std::span<const double> means) {
    if (basis.empty()) {
        throw DataError("empty operator basis");
    }
    const Eigen::Index d = basis.front().rows();
    const auto expected = static_cast<std::size_t>(d * d);
    if (basis.size() != expected || means.size() != expected) {
        throw DataError("informationally complete basis needs d^2 = " + std::to_string(expected) +
                        " elements and means, got " + std::to_string(basis.size()) + " and " +
                        std::to_string(means.size()));
    }
    auto report = orthonormality_report(basis);
    if (report.max_residual > 1e-9) {
        throw DataError("basis is not trace-orthonormal: pair (" + std::to_string(report.worst_i) + ", " +
                        std::to_string(report.worst_j) + ") has residual " +
                        internal::format_double(report.max_residual, 6));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        double herm = max_hermitian_residual(basis[i]);
        if (herm > 1e-10) {
            throw DataError("basis element " + std::to_string(i) + " is not Hermitian (residual " +
                            internal::format_double(herm, 3) + ")");
        }
    }
    Matrix mu = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        mu += means[i] * basis[i];
    }
    mu /= static_cast<double>(d);
    symmetrize(mu);
    return CandidateMatrix(std::move(mu));
}

std::vector<Matrix> dense_pauli_basis(std::size_t num_qubits) {
    const std::uint64_t count = std::uint64_t{1} << (2 * num_qubits);
    std::vector<Matrix> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        out.push_back(SparsePauliMatrix(PauliString::from_index(num_qubits, idx)).to_dense());
    }
    return out;
}

}  // namespace qtomo
