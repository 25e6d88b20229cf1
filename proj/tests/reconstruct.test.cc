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

#include <gtest/gtest.h>

#include <sstream>

#include "qtomo/simulate.h"
#include "test_util.h"

using namespace qtomo;

namespace {

// Eigenvalues clipped at zero and rescaled to unit trace.
Matrix clip_and_renormalize(const Matrix &mu) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(mu);
    RealVector vals = es.eigenvalues().cwiseMax(0.0);
    vals /= vals.sum();
    return es.eigenvectors() * vals.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TEST(reconstruct, noiseless_roundtrip) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (double p : {0.0, 0.5, 1.0}) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                DensityMatrix rho0 = mix_with_identity(random_pure_state(n, seed), p);
                ReconstructionReport r = reconstruct(exact_measurements(rho0.matrix()));
                ASSERT_LE(std::sqrt(hs_distance_sq(r.rho.matrix(), rho0.matrix())), 1e-9);
                ASSERT_GE(r.residual, 0.0);
            }
        }
    }
}

TEST(reconstruct, residual_no_worse_than_truth) {
    DensityMatrix rho0 = mix_with_identity(random_pure_state(3, 11), 0.9);
    MeasurementSet m = simulate_measurements(rho0, NoiseModel{1e-4, 11});
    ReconstructionReport r = reconstruct(m);
    EXPECT_LE(r.residual, residual_objective(m, rho0.matrix()));
    EXPECT_GE(r.rho.min_eigenvalue(), -1e-12);
    // Near-pure states under this noise have negative candidate eigenvalues.
    EXPECT_LT(r.projection.support, 8u);
}

// With d^2 measurements a PSD candidate fits the data exactly, so residuals can
// sit at the 1e-30 rounding floor; comparisons allow that much slack.
constexpr double kResidualFloor = 1e-12;

TEST(reconstruct, ml_dominance_against_simple_estimates) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        DensityMatrix rho0 = mix_with_identity(random_pure_state(3, seed), 0.9);
        MeasurementSet m = simulate_measurements(rho0, NoiseModel{1e-4, seed});
        ReconstructionReport r = reconstruct(m);
        Matrix mu = assemble_mu_pauli(m).matrix();
        EXPECT_LE(r.residual, residual_objective(m, rho0.matrix()) + kResidualFloor);
        EXPECT_LE(r.residual, residual_objective(m, clip_and_renormalize(mu)) + kResidualFloor);
        EXPECT_LE(r.residual, residual_objective(m, Matrix::Identity(8, 8) / 8.0) + kResidualFloor);
    }
}

TEST(reconstruct, error_shrinks_with_noise) {
    std::vector<double> mean_error;
    for (double v : {1e-2, 1e-4, 1e-6}) {
        double total = 0.0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            DensityMatrix rho0 = mix_with_identity(random_pure_state(2, seed), 0.9);
            ReconstructionReport r = reconstruct(simulate_measurements(rho0, NoiseModel{v, seed + 1000}));
            total += std::sqrt(hs_distance_sq(r.rho.matrix(), rho0.matrix()));
        }
        mean_error.push_back(total / 50);
    }
    EXPECT_GT(mean_error[0], mean_error[1]);
    EXPECT_GT(mean_error[1], mean_error[2]);
}

TEST(reconstruct, deterministic_apart_from_timings) {
    DensityMatrix rho0 = mix_with_identity(random_pure_state(3, 5), 0.9);
    MeasurementSet m = simulate_measurements(rho0, NoiseModel{1e-4, 5});
    ReconstructionReport a = reconstruct(m);
    ReconstructionReport b = reconstruct(m);
    EXPECT_TRUE(a.rho.matrix() == b.rho.matrix());
    EXPECT_EQ(a.projection.lambdas, b.projection.lambdas);
    EXPECT_EQ(a.residual, b.residual);
    EXPECT_GE(a.timings.basis_change, 0.0);
    EXPECT_GE(a.timings.eigensystem, 0.0);
    EXPECT_GE(a.timings.projection, 0.0);
    EXPECT_GE(a.timings.reconstruction, 0.0);
}

TEST(reconstruct, report_text) {
    DensityMatrix rho0 = mix_with_identity(random_pure_state(1, 5), 0.5);
    ReconstructionReport r = reconstruct(exact_measurements(rho0.matrix()));
    std::ostringstream out;
    write_report(out, r);
    const std::string text = out.str();
    EXPECT_EQ(text.rfind("support 2\n", 0), 0u);
    for (const char *key : {"shift ", "distance_sq ", "residual ", "t_basis ", "t_eig ", "t_proj ",
                            "t_reconstruct ", "t_total "}) {
        EXPECT_NE(text.find(std::string("\n") + key), std::string::npos) << key;
    }
}

TEST(baseline_minimize, psd_single_qubit_candidate) {
    Matrix mu(2, 2);
    mu << 0.65, 0.45, 0.45, 0.35;
    // Full-rank optimum: the objective goes to zero, so a tight gradient tolerance is reachable.
    BaselineResult r = baseline_minimize(CandidateMatrix(mu), BaselineOptions{20000, 1e-10});
    EXPECT_TRUE(r.converged);
    EXPECT_LE((r.rho.matrix() - mu).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(baseline_minimize, worked_example_distance) {
    RealVector diag(5);
    diag << 3.0 / 5, 1.0 / 2, 7.0 / 20, 1.0 / 10, -11.0 / 20;
    Matrix mu = diag.cast<Complex>().asDiagonal();
    BaselineResult r = baseline_minimize(CandidateMatrix(mu));
    EXPECT_NEAR(r.objective, 0.38, 1e-6);
    EXPECT_GE(r.rho.min_eigenvalue(), -1e-12);
}

TEST(baseline_minimize, agrees_with_projection_on_random_candidates) {
    std::mt19937_64 rng(17);
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        CandidateMatrix mu(test_util::random_candidate(4, rng, 0.3));
        auto [rho, proj] = nearest_density(mu);
        BaselineResult base = baseline_minimize(mu);
        EXPECT_GE(base.objective, proj.distance_sq - 1e-12);
        if (base.converged && std::abs(base.objective - proj.distance_sq) <= 1e-6) {
            ++agree;
        }
    }
    EXPECT_GE(agree, 95);
}

TEST(baseline_minimize, from_measurements_and_iteration_cap) {
    DensityMatrix rho0 = mix_with_identity(random_pure_state(2, 3), 0.9);
    MeasurementSet m = simulate_measurements(rho0, NoiseModel{1e-4, 3});
    BaselineResult capped = baseline_minimize(m, BaselineOptions{3, 1e-12});
    EXPECT_FALSE(capped.converged);
    EXPECT_EQ(capped.iterations, 3u);
    BaselineResult full = baseline_minimize(m);
    EXPECT_NEAR(full.objective, reconstruct(m).projection.distance_sq, 1e-6);
}
