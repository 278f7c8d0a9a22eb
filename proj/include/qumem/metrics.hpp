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

// Readout quantities: fidelity, von Neumann entropy, Wigner function.
//
// Quadrature convention: hbar = 1, x = (a + a^dagger)/sqrt(2),
// p = i(a^dagger - a)/sqrt(2). A coherent state |alpha> is centred at
// (sqrt(2) Re alpha, sqrt(2) Im alpha). Simulators using hbar = 2 place the
// same state at twice these coordinates.

#include <cstddef>
#include <span>
#include <vector>

#include "qumem/fock.hpp"

namespace qumem {

/// |<a|b>|^2
double fidelity_pure(const FockKet &a, const FockKet &b);

/// <ket|rho|ket>
double fidelity_mixed(const DensityOperator &rho, const FockKet &ket);

inline constexpr double kEigenvalueFloor = 1e-12;

/// Entropy stored in bits; nats() converts.
class EntropyValue {
  public:
    EntropyValue() = default;
    explicit EntropyValue(double bits);
    double bits() const noexcept { return bits_; }
    double nats() const noexcept;

    friend bool operator==(EntropyValue, EntropyValue) = default;

  private:
    double bits_ = 0.0;
};

/// -sum lambda log2 lambda over the eigenvalues of (rho + rho^dagger)/2
/// above kEigenvalueFloor.
EntropyValue von_neumann_entropy(const DensityOperator &rho);

/// Binary entropy h2(p) in bits.
double binary_entropy(double p);

/// W(x, p) sampled on a rectangular grid; values are stored row-major with
/// one row per momentum: values[ip * x_values.size() + ix].
struct WignerGrid {
    std::vector<double> x_values;
    std::vector<double> p_values;
    std::vector<double> values;
    /// Largest imaginary part discarded while forming `values`.
    double imag_residue = 0.0;

    double at(std::size_t ip, std::size_t ix) const { return values[ip * x_values.size() + ix]; }

    /// sum W dx dp with uniform spacings taken from the first two samples.
    double riemann_sum() const;
};

enum class WignerMethod {
    /// Fock-basis kernel recurrence, vectorized across each row.
    recurrence,
    /// (2/pi) Tr[rho D(g) P D(g)^dagger] with parity P, evaluated in an
    /// enlarged basis. Much slower; used as the independent route.
    displaced_parity,
};

WignerGrid wigner(const DensityOperator &rho, std::span<const double> x_values,
                  std::span<const double> p_values,
                  WignerMethod method = WignerMethod::recurrence);

/// n points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace qumem
