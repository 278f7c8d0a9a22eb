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

#pragma once

// Noise channels that take pure encoded states to mixed ones.
//
// Note that pure loss maps coherent states to coherent states, so on its
// own it never raises the entropy of an encoded frame. The random
// displacement channel is the one that produces informative entropy tags.

#include <cstddef>

#include "qumem/fock.hpp"

namespace qumem {

/// Intensity transmissivity eta in [0, 1].
class LossParameter {
  public:
    explicit LossParameter(double eta);
    double eta() const noexcept { return eta_; }

  private:
    double eta_;
};

/// Mean thermal photon number added by the random displacement channel.
class NoiseParameter {
  public:
    NoiseParameter() = default;
    explicit NoiseParameter(double nbar);
    double nbar() const noexcept { return nbar_; }

  private:
    double nbar_ = 0.0;
};

inline constexpr double kKrausWeightFloor = 1e-12;
inline constexpr std::size_t kNoiseRadialNodes = 12;
inline constexpr std::size_t kNoiseAngularNodes = 16;

/// sum_k K_k rho K_k^dagger with K_k = sqrt((1-eta)^k / k!) eta^{n/2} a^k.
DensityOperator pure_loss(const DensityOperator &rho, LossParameter eta,
                          double leakage_tolerance = 1e-6);

/// (1 / (pi nbar)) int d^2beta exp(-|beta|^2 / nbar) D(beta) rho D(beta)^dagger
/// on a Gauss-Laguerre (radial) x uniform (angular) grid.
/// Throws ErrorKind::cutoff when more than `leakage_tolerance` of the trace
/// is pushed past the truncation.
DensityOperator gaussian_noise(const DensityOperator &rho, NoiseParameter nbar,
                               double leakage_tolerance = kDefaultLeakageTolerance);

/// diag(nbar^n / (nbar + 1)^{n+1}), renormalized over the cutoff.
DensityOperator thermal_state(double nbar, std::size_t cutoff);

}  // namespace qumem
