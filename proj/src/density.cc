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

#include "qtomo/density.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "qtomo/errors.h"
#include "text_format.h"

namespace qtomo {

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw DataError("density matrix must be square and nonempty");
    }
    double herm = max_hermitian_residual(m_);
    if (herm > kHermitianTolerance) {
        throw DataError("density matrix is not Hermitian (residual " + internal::format_double(herm, 3) + ")");
    }
    Complex tr = m_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
        throw DataError("density matrix trace is " + internal::format_double(tr.real(), 17) + ", expected 1");
    }
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues()(0);
}

void DensityMatrix::validate_positive() const {
    double lo = min_eigenvalue();
    if (lo < kEigenvalueFloor) {
        throw DataError("density matrix has negative eigenvalue " + internal::format_double(lo, 6));
    }
}

Matrix rebuild_from_spectrum(const EigenSpectrum &spectrum, const ProjectionResult &projection) {
    const auto k = static_cast<Eigen::Index>(projection.support);
    const auto lambdas = Eigen::Map<const RealVector>(projection.lambdas.data(), k);
    const auto support = spectrum.vectors.leftCols(k);
    Matrix rho = (support * lambdas.asDiagonal()) * support.adjoint();
    symmetrize(rho);
    return rho;
}

std::pair<DensityMatrix, ProjectionResult> nearest_density(const CandidateMatrix &mu) {
    EigenSpectrum spectrum = hermitian_eigensystem(mu.matrix());
    ProjectionResult projection =
        project_to_simplex(std::span<const double>(spectrum.values.data(), spectrum.values.size()));
    return {DensityMatrix(rebuild_from_spectrum(spectrum, projection)), std::move(projection)};
}

double hs_distance_sq(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DataError("dimension mismatch in hs_distance_sq");
    }
    CompensatedSum acc;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            acc.add(std::norm(a(i, j) - b(i, j)));
        }
    }
    return acc.value();
}

double residual_objective(const MeasurementSet &m, const Matrix &rho) {
    const auto d = static_cast<Eigen::Index>(m.dimension());
    if (rho.rows() != d || rho.cols() != d) {
        throw DataError("dimension mismatch: measurements are for d=" + std::to_string(d) + ", state is " +
                        std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
    }
    CompensatedSum acc;
    for (const auto &rec : m.records()) {
        double diff = rec.mean - real_trace_product(SparsePauliMatrix(rec.op), rho);
        acc.add(diff * diff);
    }
    return acc.value();
}

void write_density(std::ostream &out, const Matrix &rho) {
    out << "dim " << rho.rows() << '\n';
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            if (j > 0) {
                out << ' ';
            }
            out << internal::format_double(rho(i, j).real(), 17) << ','
                << internal::format_double(rho(i, j).imag(), 17);
        }
        out << '\n';
    }
}

void write_density_file(const std::string &path, const Matrix &rho) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write density matrix file '" + path + "'");
    }
    write_density(out, rho);
    if (!out) {
        throw IoError("error while writing '" + path + "'");
    }
}

DensityMatrix read_density(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!internal::is_skippable(line)) {
                return true;
            }
        }
        return false;
    };
    auto fail = [&](const std::string &why) { return DataError("line " + std::to_string(line_no) + ": " + why); };

    if (!next_line()) {
        throw DataError("density matrix file is empty");
    }
    auto header = internal::split_ws(line);
    std::optional<std::uint64_t> dim;
    if (header.size() == 2 && header[0] == "dim") {
        dim = internal::parse_uint(header[1]);
    }
    if (!dim || *dim < 1 || *dim > (std::uint64_t{1} << kMaxQubits)) {
        throw fail("expected header 'dim <d>'");
    }
    const auto d = static_cast<Eigen::Index>(*dim);
    Matrix rho(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        if (!next_line()) {
            throw DataError("density matrix file ends after " + std::to_string(i) + " of " + std::to_string(d) +
                            " rows");
        }
        auto tok = internal::split_ws(line);
        if (static_cast<Eigen::Index>(tok.size()) != d) {
            throw fail("expected " + std::to_string(d) + " entries, got " + std::to_string(tok.size()));
        }
        for (Eigen::Index j = 0; j < d; ++j) {
            std::string_view t = tok[static_cast<std::size_t>(j)];
            auto comma = t.find(',');
            if (comma == std::string_view::npos) {
                throw fail("entry '" + std::string(t) + "' is not of the form re,im");
            }
            auto re = internal::parse_double(t.substr(0, comma));
            auto im = internal::parse_double(t.substr(comma + 1));
            if (!re || !im) {
                throw fail("malformed entry '" + std::string(t) + "'");
            }
            rho(i, j) = Complex(*re, *im);
        }
    }
    if (next_line()) {
        throw fail("unexpected trailing content");
    }
    DensityMatrix out(std::move(rho));
    out.validate_positive();
    return out;
}

DensityMatrix read_density_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open density matrix file '" + path + "'");
    }
    return read_density(in);
}

}  // namespace qtomo
