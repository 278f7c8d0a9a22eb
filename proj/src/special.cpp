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

#include "qumem/special.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>

#include "qumem/error.hpp"

namespace qumem::special {
namespace {

constexpr std::size_t kTableSize = 1024;

const std::array<double, kTableSize> &log_factorial_table() {
    static const auto table = [] {
        std::array<double, kTableSize> t{};
        for (std::size_t n = 1; n < kTableSize; ++n)
            t[n] = t[n - 1] + std::log(static_cast<double>(n));
        return t;
    }();
    return table;
}

}  // namespace

double log_factorial(std::size_t n) {
    if (n < kTableSize) return log_factorial_table()[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

std::vector<double> laguerre_sequence(std::size_t k, double x, std::size_t count) {
    std::vector<double> out(count);
    if (count == 0) return out;
    const double kd = static_cast<double>(k);
    out[0] = 1.0;
    if (count > 1) out[1] = 1.0 + kd - x;
    for (std::size_t n = 1; n + 1 < count; ++n) {
        const double nd = static_cast<double>(n);
        out[n + 1] = ((2.0 * nd + 1.0 + kd - x) * out[n] - (nd + kd) * out[n - 1]) / (nd + 1.0);
    }
    return out;
}

QuadratureRule gauss_laguerre(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::invalid_argument, "quadrature needs at least one node");
    // Golub-Welsch: eigenvalues of the Jacobi matrix of the Laguerre
    // recurrence are the nodes; squared first eigenvector components times
    // the weight's total mass (1) are the weights.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                   static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        jacobi(ii, ii) = 2.0 * static_cast<double>(i) + 1.0;
        if (i + 1 < n) {
            jacobi(ii, ii + 1) = static_cast<double>(i + 1);
            jacobi(ii + 1, ii) = static_cast<double>(i + 1);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        rule.nodes[i] = solver.eigenvalues()(ii);
        const double v0 = solver.eigenvectors()(0, ii);
        rule.weights[i] = v0 * v0;
    }
    return rule;
}

}  // namespace qumem::special
