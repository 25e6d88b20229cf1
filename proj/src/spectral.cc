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

#include "qtomo/spectral.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "qtomo/errors.h"
#include "text_format.h"

namespace qtomo {

EigenSpectrum hermitian_eigensystem(const Matrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DataError("eigensystem input must be square and nonempty");
    }
    double herm = max_hermitian_residual(m);
    if (herm > 1e-10) {
        throw DataError("eigensystem input is not Hermitian (max asymmetry " + internal::format_double(herm, 3) +
                        ")");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver did not converge");
    }
    // Eigen sorts ascending.
    return EigenSpectrum{solver.eigenvalues().reverse(), solver.eigenvectors().rowwise().reverse()};
}

namespace {

// Core of the projection on a nonincreasing input, onto {lambda >= 0, sum = target}.
ProjectionResult project_sorted(std::span<const double> mu, double target) {
    const std::size_t d = mu.size();
    CompensatedSum total;
    for (double x : mu) {
        total.add(x);
    }
    double acc = target - total.value();
    std::size_t i = d;
    while (i > 1 && mu[i - 1] + acc / static_cast<double>(i) < 0.0) {
        acc += mu[i - 1];
        --i;
    }
    ProjectionResult r;
    r.lambdas.assign(d, 0.0);
    r.support = i;
    r.shift = acc / static_cast<double>(i);
    CompensatedSum dist;
    for (std::size_t j = 0; j < i; ++j) {
        r.lambdas[j] = mu[j] + r.shift;
        dist.add(r.shift * r.shift);
    }
    for (std::size_t j = i; j < d; ++j) {
        dist.add(mu[j] * mu[j]);
    }
    r.distance_sq = dist.value();
    return r;
}

}  // namespace

ProjectionResult project_to_simplex(std::span<const double> mu) {
    if (mu.empty()) {
        throw DataError("cannot project an empty spectrum");
    }
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (!std::isfinite(mu[j])) {
            throw DataError("spectrum entry " + std::to_string(j) + " is not finite");
        }
        if (j > 0 && mu[j] > mu[j - 1]) {
            throw DataError("spectrum is not sorted nonincreasing at index " + std::to_string(j));
        }
    }
    CompensatedSum total;
    for (double x : mu) {
        total.add(x);
    }
    if (std::abs(total.value() - 1.0) > kStrictSumTolerance) {
        throw DataError("spectrum sums to " + internal::format_double(total.value(), 17) +
                        ", not 1; use normalize_then_project for unnormalized input");
    }
    return project_sorted(mu, 1.0);
}

ProjectionResult normalize_then_project(std::span<const double> x, double target) {
    if (x.empty()) {
        throw UsageError("cannot project an empty vector");
    }
    if (!(target > 0.0) || !std::isfinite(target)) {
        throw UsageError("target sum must be positive and finite");
    }
    const std::size_t d = x.size();
    for (std::size_t j = 0; j < d; ++j) {
        if (!std::isfinite(x[j])) {
            throw DataError("entry " + std::to_string(j) + " is not finite");
        }
    }
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

    CompensatedSum total;
    for (double v : x) {
        total.add(v);
    }
    const double pre_shift = (target - total.value()) / static_cast<double>(d);
    std::vector<double> sorted(d);
    for (std::size_t k = 0; k < d; ++k) {
        sorted[k] = x[order[k]] + pre_shift;
    }
    ProjectionResult inner = project_sorted(sorted, target);

    ProjectionResult r;
    r.lambdas.assign(d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        r.lambdas[order[k]] = inner.lambdas[k];
    }
    r.support = inner.support;
    r.shift = pre_shift + inner.shift;
    CompensatedSum dist;
    for (std::size_t j = 0; j < d; ++j) {
        double diff = r.lambdas[j] - x[j];
        dist.add(diff * diff);
    }
    r.distance_sq = dist.value();
    return r;
}

namespace {

std::string format_value(double v) {
    if (v == 0.0) {
        return "0";
    }
    return internal::format_double(v, 15);
}

}  // namespace

void write_projection(std::ostream &out, const ProjectionResult &r) {
    out << "support " << r.support << '\n';
    out << "shift " << format_value(r.shift) << '\n';
    out << "distance_sq " << format_value(r.distance_sq) << '\n';
    for (double l : r.lambdas) {
        out << format_value(l) << '\n';
    }
}

std::vector<double> read_spectrum(std::istream &in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (internal::is_skippable(line)) {
            continue;
        }
        auto tok = internal::split_ws(line);
        std::optional<double> v;
        if (tok.size() == 1) {
            v = internal::parse_double(tok[0]);
        }
        if (!v || !std::isfinite(*v)) {
            throw DataError("line " + std::to_string(line_no) + ": expected one real number, got '" + line + "'");
        }
        values.push_back(*v);
    }
    if (values.empty()) {
        throw DataError("spectrum file contains no values");
    }
    return values;
}

}  // namespace qtomo
