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

// Single-mode states on a truncated number basis |0>, ..., |cutoff-1>.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qumem/matrix.hpp"

namespace qumem {

inline constexpr double kDefaultAmplitudeCap = 10.0;
inline constexpr double kDefaultTruncationTolerance = 1e-6;
inline constexpr double kDefaultLeakageTolerance = 1e-4;

/// Complex displacement amplitude alpha = x + ip. Always finite and bounded by
/// a cap so that cutoff estimates stay meaningful.
class Amplitude {
  public:
    Amplitude() = default;
    Amplitude(double re, double im = 0.0, double cap = kDefaultAmplitudeCap);
    explicit Amplitude(cplx value, double cap = kDefaultAmplitudeCap)
        : Amplitude(value.real(), value.imag(), cap) {}

    double real() const noexcept { return value_.real(); }
    double imag() const noexcept { return value_.imag(); }
    cplx value() const noexcept { return value_; }
    double magnitude() const noexcept { return std::abs(value_); }
    double cap() const noexcept { return cap_; }

    Amplitude operator-() const { return Amplitude(-value_, cap_); }

  private:
    cplx value_{};
    double cap_ = kDefaultAmplitudeCap;
};

/// Pure state. Carries the cumulative norm deficit discarded by truncation
/// on the way to this value.
class FockKet {
  public:
    /// Takes an already normalized vector; |norm^2 - 1| must be <= tolerance.
    explicit FockKet(std::vector<cplx> amplitudes,
                     double tolerance = kDefaultTruncationTolerance);

    /// Rescales to unit norm and records the deficit 1 - |v|^2 as leakage.
    static FockKet renormalized(std::vector<cplx> amplitudes, double prior_leakage = 0.0);

    std::size_t cutoff() const noexcept { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    cplx operator[](std::size_t n) const noexcept { return amplitudes_[n]; }
    double norm_squared() const noexcept;
    double leakage() const noexcept { return leakage_; }

    /// Same state times e^{i theta}.
    FockKet with_global_phase(double theta) const;

  private:
    FockKet() = default;
    std::vector<cplx> amplitudes_;
    double leakage_ = 0.0;
};

/// Mixed state: Hermitian, unit trace. Positivity is not checked on
/// construction (it needs an eigendecomposition); see min_eigenvalue().
class DensityOperator {
  public:
    explicit DensityOperator(CMatrix matrix, double leakage = 0.0);

    const CMatrix &matrix() const noexcept { return matrix_; }
    std::size_t cutoff() const noexcept { return matrix_.rows(); }
    double leakage() const noexcept { return leakage_; }
    cplx operator()(std::size_t i, std::size_t j) const noexcept { return matrix_(i, j); }

    double purity() const;
    double min_eigenvalue() const;

  private:
    CMatrix matrix_;
    double leakage_ = 0.0;
};

/// ceil(|alpha|^2 + 6|alpha| + 10): cutoff at which the Poisson tail of a
/// coherent state is negligible.
std::size_t required_cutoff(double magnitude);

FockKet vacuum(std::size_t cutoff);

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!), renormalized over the truncation.
/// Throws ErrorKind::truncation if more than `tolerance` of the norm falls
/// outside the cutoff.
FockKet coherent_ket(Amplitude alpha, std::size_t cutoff,
                     double tolerance = kDefaultTruncationTolerance);

/// <m|D(alpha)|n> from the closed form in associated Laguerre polynomials.
CMatrix displacement_matrix(Amplitude alpha, std::size_t cutoff);

/// D(alpha)|state>, renormalized. Throws ErrorKind::leakage when the norm
/// lost to the truncation exceeds `leakage_tolerance`.
FockKet apply_displacement(const FockKet &state, Amplitude alpha,
                           double leakage_tolerance = kDefaultLeakageTolerance);

std::vector<double> number_distribution(const FockKet &state);

/// One photon-number measurement drawn with a seeded mt19937_64.
std::size_t sample_fock(const FockKet &state, std::uint64_t seed);
std::vector<std::size_t> sample_fock(const FockKet &state, std::uint64_t seed,
                                     std::size_t shots);

DensityOperator ket_to_density(const FockKet &state);

}  // namespace qumem
