// Copyright 2026 The qumem Authors
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

#include <gtest/gtest.h>

#include "qumem/channels.hpp"
#include "qumem/metrics.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

namespace qumem {
namespace {

using test_support::error_kind;

DensityOperator coherent_rho(cplx a, std::size_t cutoff) {
    return ket_to_density(coherent_ket(Amplitude(a), cutoff));
}

TEST(LossParameter, Range) {
    EXPECT_EQ(error_kind([] { LossParameter(-0.1); }), ErrorKind::invalid_parameter);
    EXPECT_EQ(error_kind([] { LossParameter(1.5); }), ErrorKind::invalid_parameter);
    EXPECT_EQ(error_kind([] { LossParameter(NAN); }), ErrorKind::invalid_parameter);
    EXPECT_NO_THROW(LossParameter(0.0));
    EXPECT_NO_THROW(LossParameter(1.0));
}

TEST(NoiseParameter, Range) {
    EXPECT_EQ(error_kind([] { NoiseParameter(-1.0); }), ErrorKind::invalid_parameter);
    EXPECT_EQ(error_kind([] { NoiseParameter{INFINITY}; }), ErrorKind::invalid_parameter);
}

TEST(PureLoss, UnitTransmissivityIsIdentity) {
    const auto rho = coherent_rho({0.6, -0.3}, 25);
    const auto out = pure_loss(rho, LossParameter(1.0));
    EXPECT_LT(max_abs_diff(out.matrix(), rho.matrix()), 1e-10);
}

TEST(PureLoss, CoherentStateShrinks) {
    const auto out = pure_loss(coherent_rho(0.8, 30), LossParameter(0.25));
    EXPECT_GE(fidelity_mixed(out, coherent_ket(Amplitude(0.4), 30)), 1.0 - 1e-6);
    EXPECT_LT(von_neumann_entropy(out).bits(), 1e-6);
}

TEST(PureLoss, CoherentStaysPureForAnyEta) {
    for (double eta : {0.0, 0.1, 0.5, 0.9}) {
        const auto out = pure_loss(coherent_rho({0.5, 0.7}, 30), LossParameter(eta));
        EXPECT_LT(von_neumann_entropy(out).bits(), 1e-6) << eta;
        EXPECT_GE(fidelity_mixed(out, coherent_ket(Amplitude(std::sqrt(eta) * cplx(0.5, 0.7)), 30)),
                  1.0 - 1e-6);
    }
}

TEST(PureLoss, FullLossGivesVacuum) {
    const auto out = pure_loss(coherent_rho(1.0, 25), LossParameter(0.0));
    EXPECT_NEAR(out(0, 0).real(), 1.0, 1e-10);
}

TEST(PureLoss, Composition) {
    // Fock-diagonal plus coherences: a noisy displaced state.
    const auto rho = gaussian_noise(coherent_rho({0.4, 0.2}, 24), NoiseParameter(0.3));
    for (auto [e1, e2] : {std::pair{0.3, 0.6}, {0.9, 0.5}, {0.15, 0.8}}) {
        const auto twice = pure_loss(pure_loss(rho, LossParameter(e1)), LossParameter(e2));
        const auto once = pure_loss(rho, LossParameter(e1 * e2));
        EXPECT_LT(max_abs_diff(twice.matrix(), once.matrix()), 1e-6);
    }
}

TEST(PureLoss, PreservesTraceHermiticityPositivity) {
    const auto rho = gaussian_noise(coherent_rho({0.9, -0.1}, 30), NoiseParameter(0.5));
    for (double eta : {0.2, 0.7}) {
        const auto out = pure_loss(rho, LossParameter(eta));
        EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-10);
        EXPECT_LT(out.matrix().hermiticity_error(), 1e-10);
        EXPECT_GT(out.min_eigenvalue(), -1e-8);
    }
}

TEST(GaussianNoise, ZeroNoiseIsIdentity) {
    const auto rho = coherent_rho({0.3, 0.3}, 20);
    EXPECT_EQ(max_abs_diff(gaussian_noise(rho, NoiseParameter(0.0)).matrix(), rho.matrix()), 0.0);
}

TEST(GaussianNoise, VacuumBecomesThermal) {
    const auto out = gaussian_noise(ket_to_density(vacuum(30)), NoiseParameter(1.0));
    EXPECT_NEAR(von_neumann_entropy(out).bits(), oracle::thermal_entropy_bits(1.0), 2e-2);
    EXPECT_NEAR(oracle::thermal_entropy_bits(1.0), 2.0, 1e-15);
    // Populations follow nbar^n / (nbar+1)^{n+1}.
    for (std::size_t n = 0; n < 8; ++n)
        EXPECT_NEAR(out(n, n).real(), std::pow(0.5, static_cast<double>(n + 1)), 2e-3) << n;
}

TEST(GaussianNoise, AnalyticThermalEntropyMatchesEigendecomposition) {
    for (double nbar : {0.25, 0.5, 1.0, 2.0}) {
        const auto thermal = thermal_state(nbar, 80);
        EXPECT_NEAR(von_neumann_entropy(thermal).bits(), oracle::thermal_entropy_bits(nbar), 1e-8);
    }
}

TEST(GaussianNoise, EntropyIsDisplacementInvariant) {
    const double s_vac = von_neumann_entropy(gaussian_noise(ket_to_density(vacuum(30)), NoiseParameter(1.0))).bits();
    const double s_coh = von_neumann_entropy(gaussian_noise(coherent_rho(0.5, 30), NoiseParameter(1.0))).bits();
    EXPECT_NEAR(s_vac, s_coh, 1e-3);
}

TEST(GaussianNoise, EntropyIncreasesWithNoise) {
    const auto rho = coherent_rho(0.6, 30);
    double previous = -1.0;
    for (double nbar : {0.0, 0.25, 0.5, 1.0, 2.0}) {
        const double s = von_neumann_entropy(gaussian_noise(rho, NoiseParameter(nbar))).bits();
        EXPECT_GT(s, previous + 1e-4) << nbar;
        previous = s;
    }
}

TEST(GaussianNoise, PreservesTraceHermiticityPositivity) {
    for (double nbar : {0.25, 1.0, 2.0}) {
        const auto out = gaussian_noise(coherent_rho({0.5, -0.5}, 30), NoiseParameter(nbar));
        EXPECT_LT(out.leakage(), 1e-4);
        EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-10);
        EXPECT_LT(out.matrix().hermiticity_error(), 1e-10);
        EXPECT_GT(out.min_eigenvalue(), -1e-8);
    }
}

TEST(GaussianNoise, SmallCutoffIsRejected) {
    EXPECT_EQ(error_kind([] { gaussian_noise(ket_to_density(vacuum(6)), NoiseParameter(2.0)); }),
              ErrorKind::cutoff);
}

}  // namespace
}  // namespace qumem
