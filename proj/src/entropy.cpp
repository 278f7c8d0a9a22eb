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

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qumem/error.hpp"
#include "qumem/metrics.hpp"

namespace qumem {

double fidelity_pure(const FockKet &a, const FockKet &b) {
    if (a.cutoff() != b.cutoff())
        throw Error(ErrorKind::dimension_mismatch,
                    "fidelity between kets of cutoff " + std::to_string(a.cutoff()) + " and " +
                        std::to_string(b.cutoff()));
    cplx overlap{};
    for (std::size_t n = 0; n < a.cutoff(); ++n) overlap += std::conj(a[n]) * b[n];
    return std::clamp(std::norm(overlap), 0.0, 1.0);
}

double fidelity_mixed(const DensityOperator &rho, const FockKet &ket) {
    if (rho.cutoff() != ket.cutoff())
        throw Error(ErrorKind::dimension_mismatch,
                    "fidelity between operator of cutoff " + std::to_string(rho.cutoff()) +
                        " and ket of cutoff " + std::to_string(ket.cutoff()));
    const std::size_t c = ket.cutoff();
    cplx value{};
    for (std::size_t i = 0; i < c; ++i) {
        cplx row{};
        for (std::size_t j = 0; j < c; ++j) row += rho(i, j) * ket[j];
        value += std::conj(ket[i]) * row;
    }
    return std::clamp(value.real(), 0.0, 1.0);
}

EntropyValue::EntropyValue(double bits) : bits_(bits) {
    if (!(bits >= 0.0) || !std::isfinite(bits))
        throw Error(ErrorKind::invalid_parameter,
                    "entropy must be finite and non-negative, got " + std::to_string(bits));
}

double EntropyValue::nats() const noexcept { return bits_ * std::numbers::ln2; }

EntropyValue von_neumann_entropy(const DensityOperator &rho) {
    const auto n = static_cast<Eigen::Index>(rho.cutoff());
    Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        rho.matrix().data().data(), n, n);
    const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda > kEigenvalueFloor) s -= lambda * std::log2(lambda);
    }
    const double upper = std::log2(static_cast<double>(rho.cutoff()));
    return EntropyValue(std::clamp(s, 0.0, upper));
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace qumem
