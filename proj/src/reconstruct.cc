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

#include "qtomo/reconstruct.h"

#include <chrono>
#include <cmath>
#include <ostream>

#include "qtomo/errors.h"
#include "text_format.h"

namespace qtomo {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::pair<DensityMatrix, ProjectionResult> timed_nearest_density(const CandidateMatrix &mu,
                                                                 StageTimings &timings) {
    auto t0 = Clock::now();
    EigenSpectrum spectrum = hermitian_eigensystem(mu.matrix());
    timings.eigensystem = seconds_since(t0);

    t0 = Clock::now();
    ProjectionResult projection =
        project_to_simplex(std::span<const double>(spectrum.values.data(), spectrum.values.size()));
    timings.projection = seconds_since(t0);

    t0 = Clock::now();
    Matrix rho = rebuild_from_spectrum(spectrum, projection);
    timings.reconstruction = seconds_since(t0);

    return {DensityMatrix(std::move(rho)), std::move(projection)};
}

ReconstructionReport reconstruct(const MeasurementSet &m) {
    StageTimings timings;
    auto t0 = Clock::now();
    CandidateMatrix mu = assemble_mu_pauli(m);
    timings.basis_change = seconds_since(t0);

    auto [rho, projection] = timed_nearest_density(mu, timings);
    double residual = residual_objective(m, rho.matrix());
    return ReconstructionReport{std::move(rho), std::move(projection), residual, timings};
}

void write_report(std::ostream &out, const ReconstructionReport &report) {
    auto g = [](double v) { return internal::format_double(v, 17); };
    out << "support " << report.projection.support << '\n';
    out << "shift " << g(report.projection.shift) << '\n';
    out << "distance_sq " << g(report.projection.distance_sq) << '\n';
    out << "residual " << g(report.residual) << '\n';
    out << "t_basis " << g(report.timings.basis_change) << '\n';
    out << "t_eig " << g(report.timings.eigensystem) << '\n';
    out << "t_proj " << g(report.timings.projection) << '\n';
    out << "t_reconstruct " << g(report.timings.reconstruction) << '\n';
    out << "t_total " << g(report.timings.total()) << '\n';
}

namespace {

struct Evaluation {
    double objective;
    Matrix rho;
};

// rho = T^dagger T / ||T||_F^2 and ||mu - rho||^2.
Evaluation evaluate(const Matrix &mu, const Matrix &t) {
    Matrix a = t.adjoint() * t;
    double tau = a.trace().real();
    Matrix rho = a / tau;
    return {(rho - mu).squaredNorm(), std::move(rho)};
}

// Gradient of ||mu - rho||^2 with respect to the real and imaginary parts of
// T, packed as a complex matrix and restricted to the lower triangle:
//   G = 2 (rho - mu),  H = (G - Tr[G rho] I) / tau,  grad = 2 T H.
Matrix gradient(const Matrix &mu, const Matrix &t, const Matrix &rho) {
    const Eigen::Index d = mu.rows();
    double tau = t.squaredNorm();
    Matrix g = 2.0 * (rho - mu);
    Complex g_rho = (g * rho).trace();
    Matrix h = (g - g_rho.real() * Matrix::Identity(d, d)) / tau;
    Matrix grad = 2.0 * t * h;
    return grad.triangularView<Eigen::Lower>();
}

}  // namespace

BaselineResult baseline_minimize(const CandidateMatrix &mu_c, const BaselineOptions &options) {
    const Matrix &mu = mu_c.matrix();
    const Eigen::Index d = mu.rows();
    Matrix t = Matrix::Identity(d, d);
    Evaluation cur = evaluate(mu, t);
    double step = 1.0;
    constexpr double kArmijo = 1e-4;
    constexpr double kMinStep = 1e-20;

    std::size_t iter = 0;
    bool converged = false;
    for (; iter < options.max_iters; ++iter) {
        Matrix grad = gradient(mu, t, cur.rho);
        double gnorm_sq = grad.squaredNorm();
        if (std::sqrt(gnorm_sq) <= options.tol) {
            converged = true;
            break;
        }
        bool accepted = false;
        while (step > kMinStep) {
            Matrix trial = t - step * grad;
            Evaluation next = evaluate(mu, trial);
            if (next.objective <= cur.objective - kArmijo * step * gnorm_sq) {
                // The objective is scale invariant in T; renormalizing keeps step sizes comparable.
                t = trial / trial.norm();
                cur = evaluate(mu, t);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;
        }
        step *= 2.0;
    }
    Matrix rho = cur.rho;
    symmetrize(rho);
    double objective = (rho - mu).squaredNorm();
    return BaselineResult{DensityMatrix(std::move(rho)), objective, iter, converged};
}

BaselineResult baseline_minimize(const MeasurementSet &m, const BaselineOptions &options) {
    return baseline_minimize(assemble_mu_pauli(m), options);
}

}  // namespace qtomo
