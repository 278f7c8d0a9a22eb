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

#include <random>

#include "qumem/channels.hpp"
#include "qumem/metrics.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

namespace qumem {
namespace {

using test_support::error_kind;

DensityOperator real_2x2(double a, double b, double c) {
    CMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = b;
    m(1, 1) = c;
    return DensityOperator(std::move(m));
}

TEST(FidelityPure, SelfOverlapIsOne) {
    const FockKet k = coherent_ket(Amplitude(0.3, 0.4), 20);
    EXPECT_NEAR(fidelity_pure(k, k), 1.0, 1e-14);
}

TEST(FidelityPure, CoherentPairsMatchClosedForm) {
    EXPECT_NEAR(fidelity_pure(coherent_ket(Amplitude(0.5), 30), coherent_ket(Amplitude(0.6), 30)),
                0.990049833749168, 1e-6);
    EXPECT_NEAR(fidelity_pure(coherent_ket(Amplitude(1.0), 40), coherent_ket(Amplitude(1.5), 40)),
                0.778800783071405, 1e-5);
}

TEST(FidelityPure, ClosedFormProperty) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> r(0.0, 1.2), th(0.0, 2.0 * M_PI);
    for (int i = 0; i < 50; ++i) {
        const cplx a = std::polar(r(rng), th(rng));
        const cplx b = std::polar(r(rng), th(rng));
        const double f = fidelity_pure(coherent_ket(Amplitude(a), 40), coherent_ket(Amplitude(b), 40));
        EXPECT_NEAR(f, std::exp(-std::norm(a - b)), 1e-6);
        const double g = fidelity_pure(coherent_ket(Amplitude(b), 40), coherent_ket(Amplitude(a), 40));
        EXPECT_NEAR(f, g, 1e-15);
    }
}

TEST(FidelityPure, GlobalPhaseInvariance) {
    const FockKet a = coherent_ket(Amplitude(0.7, -0.2), 25);
    const FockKet b = coherent_ket(Amplitude(0.1, 0.5), 25);
    const double f = fidelity_pure(a, b);
    for (double theta : {0.3, 1.7, -2.9}) {
        EXPECT_NEAR(fidelity_pure(a.with_global_phase(theta), b), f, 1e-12);
        EXPECT_NEAR(fidelity_pure(a, b.with_global_phase(theta)), f, 1e-12);
    }
}

TEST(FidelityPure, CutoffMismatch) {
    EXPECT_EQ(error_kind([] { fidelity_pure(vacuum(3), vacuum(4)); }), ErrorKind::dimension_mismatch);
}

TEST(FidelityMixed, RankOneMatchesPure) {
    const FockKet psi = coherent_ket(Amplitude(0.4, 0.1), 20);
    const FockKet phi = coherent_ket(Amplitude(-0.2, 0.6), 20);
    EXPECT_NEAR(fidelity_mixed(ket_to_density(psi), phi), fidelity_pure(psi, phi), 1e-10);
}

TEST(FidelityMixed, MaximallyMixedQubit) {
    const auto rho = real_2x2(0.5, 0.0, 0.5);
    EXPECT_NEAR(fidelity_mixed(rho, vacuum(2)), 0.5, 1e-15);
    EXPECT_NEAR(fidelity_mixed(rho, FockKet({0.0, 1.0})), 0.5, 1e-15);
}

TEST(FidelityMixed, ThermalAgainstVacuum) {
    EXPECT_NEAR(fidelity_mixed(thermal_state(1.0, 60), vacuum(60)), 0.5, 1e-12);
}

TEST(FidelityMixed, CutoffMismatch) {
    EXPECT_EQ(error_kind([] { fidelity_mixed(ket_to_density(vacuum(3)), vacuum(4)); }),
              ErrorKind::dimension_mismatch);
}

TEST(Entropy, PureStatesAreZero) {
    EXPECT_NEAR(von_neumann_entropy(ket_to_density(vacuum(10))).bits(), 0.0, 1e-9);
    EXPECT_NEAR(von_neumann_entropy(ket_to_density(coherent_ket(Amplitude(1.1, 0.3), 30))).bits(),
                0.0, 1e-9);
}

TEST(Entropy, FrameMatricesAgainstQuadraticFormula) {
    EXPECT_NEAR(oracle::entropy_2x2(0.8, 0.2, 0.2), 0.582783134300260, 1e-12);
    EXPECT_NEAR(oracle::entropy_2x2(0.6, 0.4, 0.4), 0.428710071606923, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(real_2x2(0.8, 0.2, 0.2)).bits(), 0.5828, 1e-4);
    EXPECT_NEAR(von_neumann_entropy(real_2x2(0.6, 0.4, 0.4)).bits(), 0.4287, 1e-4);
    EXPECT_NEAR(von_neumann_entropy(real_2x2(0.8, 0.2, 0.2)).bits(),
                oracle::entropy_2x2(0.8, 0.2, 0.2), 1e-12);
}

TEST(Entropy, DiagonalIsBinaryEntropy) {
    for (int i = 0; i <= 5; ++i) {
        const double p = 0.1 * i;
        EXPECT_NEAR(von_neumann_entropy(real_2x2(p, 0.0, 1.0 - p)).bits(), binary_entropy(p), 1e-10);
    }
    EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
}

TEST(Entropy, NatsConversion) {
    const EntropyValue s = von_neumann_entropy(real_2x2(0.5, 0.0, 0.5));
    EXPECT_NEAR(s.bits(), 1.0, 1e-12);
    EXPECT_NEAR(s.nats(), std::log(2.0), 1e-12);
}

TEST(Entropy, BoundedByLogCutoff) {
    CMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 0.25;
    EXPECT_NEAR(von_neumann_entropy(DensityOperator(m)).bits(), 2.0, 1e-12);
}

TEST(EntropyValue, RejectsNegative) {
    EXPECT_EQ(error_kind([] { EntropyValue(-0.1); }), ErrorKind::invalid_parameter);
}

}  // namespace
}  // namespace qumem
