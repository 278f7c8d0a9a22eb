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

#include "qumem/fock.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "qumem/error.hpp"
#include "qumem/kernels.hpp"
#include "qumem/special.hpp"

namespace qumem {
namespace {

double sum_norm(std::span<const cplx> v) {
    double s = 0.0;
    for (const cplx &a : v) s += std::norm(a);
    return s;
}

// Uniform double in [0, 1) from the top 53 bits; fixed across standard
// libraries, unlike std::uniform_real_distribution.
double unit_draw(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t draw(const std::vector<double> &cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

std::vector<double> cumulative(const FockKet &state) {
    std::vector<double> cdf = number_distribution(state);
    std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
    return cdf;
}

}  // namespace

Amplitude::Amplitude(double re, double im, double cap) : value_(re, im), cap_(cap) {
    if (!std::isfinite(re) || !std::isfinite(im))
        throw Error(ErrorKind::invalid_parameter, "amplitude must be finite");
    if (std::abs(value_) > cap)
        throw Error(ErrorKind::invalid_parameter,
                    "amplitude magnitude " + std::to_string(std::abs(value_)) +
                        " exceeds cap " + std::to_string(cap));
}

FockKet::FockKet(std::vector<cplx> amplitudes, double tolerance)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty())
        throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 1");
    const double n2 = sum_norm(amplitudes_);
    if (!(std::abs(n2 - 1.0) <= tolerance))
        throw Error(ErrorKind::invalid_argument,
                    "ket is not normalized (norm^2 = " + std::to_string(n2) + ")");
}

FockKet FockKet::renormalized(std::vector<cplx> amplitudes, double prior_leakage) {
    if (amplitudes.empty())
        throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 1");
    const double n2 = sum_norm(amplitudes);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw Error(ErrorKind::invalid_argument, "cannot normalize a zero or non-finite vector");
    const double scale = 1.0 / std::sqrt(n2);
    for (cplx &a : amplitudes) a *= scale;
    FockKet ket;
    ket.amplitudes_ = std::move(amplitudes);
    ket.leakage_ = prior_leakage + std::max(0.0, 1.0 - n2);
    return ket;
}

double FockKet::norm_squared() const noexcept { return sum_norm(amplitudes_); }

FockKet FockKet::with_global_phase(double theta) const {
    FockKet out = *this;
    const cplx phase = std::polar(1.0, theta);
    for (cplx &a : out.amplitudes_) a *= phase;
    return out;
}

DensityOperator::DensityOperator(CMatrix matrix, double leakage)
    : matrix_(std::move(matrix)), leakage_(leakage) {
    if (matrix_.rows() == 0 || !matrix_.square())
        throw Error(ErrorKind::invalid_dimension, "density operator must be square and non-empty");
    if (matrix_.hermiticity_error() > 1e-10)
        throw Error(ErrorKind::invalid_argument, "density operator is not Hermitian");
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > 1e-8)
        throw Error(ErrorKind::invalid_argument,
                    "density operator trace " + std::to_string(tr) + " is not 1");
}

double DensityOperator::purity() const {
    // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    double p = 0.0;
    for (const cplx &v : matrix_.data()) p += std::norm(v);
    return p;
}

double DensityOperator::min_eigenvalue() const {
    const auto n = static_cast<Eigen::Index>(cutoff());
    Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        matrix_.data().data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

std::size_t required_cutoff(double magnitude) {
    return static_cast<std::size_t>(std::ceil(magnitude * magnitude + 6.0 * magnitude + 10.0));
}

FockKet vacuum(std::size_t cutoff) {
    if (cutoff == 0) throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 1");
    std::vector<cplx> v(cutoff);
    v[0] = 1.0;
    return FockKet(std::move(v));
}

FockKet coherent_ket(Amplitude alpha, std::size_t cutoff, double tolerance) {
    if (cutoff == 0) throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 1");
    const cplx a = alpha.value();
    std::vector<cplx> v(cutoff);
    v[0] = std::exp(-0.5 * std::norm(a));
    for (std::size_t n = 1; n < cutoff; ++n)
        v[n] = v[n - 1] * a / std::sqrt(static_cast<double>(n));
    const double n2 = sum_norm(v);
    if (1.0 - n2 > tolerance)
        throw Error(ErrorKind::truncation,
                    "cutoff " + std::to_string(cutoff) + " truncates coherent state |" +
                        std::to_string(alpha.magnitude()) + "| by " + std::to_string(1.0 - n2) +
                        "; use cutoff >= " + std::to_string(required_cutoff(alpha.magnitude())));
    return FockKet::renormalized(std::move(v));
}

CMatrix displacement_matrix(Amplitude alpha, std::size_t cutoff) {
    if (cutoff == 0) throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 1");
    const double r = alpha.magnitude();
    if (r == 0.0) return CMatrix::identity(cutoff);

    const double theta = std::arg(alpha.value());
    const double x = r * r;
    const double log_r = std::log(r);
    CMatrix d(cutoff, cutoff);
    for (std::size_t k = 0; k < cutoff; ++k) {
        const std::size_t count = cutoff - k;
        const std::vector<double> lag = special::laguerre_sequence(k, x, count);
        const double kd = static_cast<double>(k);
        // alpha^k below the diagonal, (-alpha*)^k above it.
        const cplx lower_phase = std::polar(1.0, kd * theta);
        const cplx upper_phase = (k % 2 == 0 ? 1.0 : -1.0) * std::conj(lower_phase);
        for (std::size_t n = 0; n < count; ++n) {
            const double log_mag = 0.5 * (special::log_factorial(n) - special::log_factorial(n + k)) +
                                   kd * log_r - 0.5 * x;
            const double mag = std::exp(log_mag) * lag[n];
            d(n + k, n) = mag * lower_phase;
            if (k > 0) d(n, n + k) = mag * upper_phase;
        }
    }
    return d;
}

FockKet apply_displacement(const FockKet &state, Amplitude alpha, double leakage_tolerance) {
    if (alpha.magnitude() == 0.0) return state;
    const std::size_t c = state.cutoff();
    const CMatrix d = displacement_matrix(alpha, c);
    std::vector<cplx> out(c);
    kernels::active().matvec(d.data().data(), state.amplitudes().data(), out.data(), c, c);
    const double deficit = 1.0 - sum_norm(out);
    if (deficit > leakage_tolerance)
        throw Error(ErrorKind::leakage,
                    "displacement by |" + std::to_string(alpha.magnitude()) + "| leaks " +
                        std::to_string(deficit) + " of the norm past cutoff " +
                        std::to_string(c) + "; increase the cutoff");
    return FockKet::renormalized(std::move(out), state.leakage());
}

std::vector<double> number_distribution(const FockKet &state) {
    std::vector<double> p(state.cutoff());
    for (std::size_t n = 0; n < p.size(); ++n) p[n] = std::norm(state[n]);
    return p;
}

std::size_t sample_fock(const FockKet &state, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<double> cdf = cumulative(state);
    return draw(cdf, unit_draw(rng) * cdf.back());
}

std::vector<std::size_t> sample_fock(const FockKet &state, std::uint64_t seed,
                                     std::size_t shots) {
    std::mt19937_64 rng(seed);
    const std::vector<double> cdf = cumulative(state);
    std::vector<std::size_t> out(shots);
    for (auto &o : out) o = draw(cdf, unit_draw(rng) * cdf.back());
    return out;
}

DensityOperator ket_to_density(const FockKet &state) {
    const std::size_t c = state.cutoff();
    const double scale = 1.0 / state.norm_squared();
    CMatrix m(c, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = scale * state[i] * std::conj(state[j]);
    return DensityOperator(std::move(m), state.leakage());
}

}  // namespace qumem
