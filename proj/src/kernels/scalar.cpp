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

#include <cmath>
#include <numbers>

#include "tables.hpp"

namespace qumem::kernels::scalar {
namespace {

void matvec(const cplx *a, const cplx *x, cplx *y, std::size_t rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) {
        const cplx *row = a + i * cols;
        double re = 0.0;
        double im = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            re += row[j].real() * x[j].real() - row[j].imag() * x[j].imag();
            im += row[j].real() * x[j].imag() + row[j].imag() * x[j].real();
        }
        y[i] = {re, im};
    }
}

void matmul(const cplx *a, const cplx *b, cplx *c, std::size_t n, std::size_t k,
            std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx *crow = c + i * m;
        for (std::size_t j = 0; j < m; ++j) crow[j] = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            const cplx s = a[i * k + l];
            if (s == cplx{}) continue;
            const cplx *brow = b + l * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += s * brow[j];
        }
    }
}

void matmul_adjoint(const cplx *a, const cplx *b, cplx *c, std::size_t n, std::size_t k,
                    std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx *arow = a + i * k;
        for (std::size_t j = 0; j < m; ++j) {
            const cplx *brow = b + j * k;
            double re = 0.0;
            double im = 0.0;
            for (std::size_t l = 0; l < k; ++l) {
                // a * conj(b)
                re += arow[l].real() * brow[l].real() + arow[l].imag() * brow[l].imag();
                im += arow[l].imag() * brow[l].real() - arow[l].real() * brow[l].imag();
            }
            c[i * m + j] = {re, im};
        }
    }
}

void axpy(double w, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += w * x[i];
}

// Fock-basis Wigner kernels by the three-term recurrence in the displaced
// amplitude A = (x + ip)/sqrt(2). list[n] holds the kernel for |m><n| as the
// outer loop advances m.
double wigner_point(const cplx *rho, std::size_t dim, cplx amp, cplx *list) {
    const double w0 = std::exp(-2.0 * std::norm(amp)) / std::numbers::pi;
    const cplx two_a = 2.0 * amp;
    const cplx two_ac = std::conj(two_a);

    list[0] = w0;
    double w = rho[0].real() * w0;
    for (std::size_t n = 1; n < dim; ++n) {
        list[n] = two_a * list[n - 1] / std::sqrt(static_cast<double>(n));
        w += 2.0 * (rho[n] * list[n]).real();
    }
    for (std::size_t m = 1; m < dim; ++m) {
        const double sm = std::sqrt(static_cast<double>(m));
        cplx temp = list[m];
        list[m] = (two_ac * temp - sm * list[m - 1]) / sm;
        w += (rho[m * dim + m] * list[m]).real();
        for (std::size_t n = m + 1; n < dim; ++n) {
            const cplx next =
                (two_a * list[n - 1] - sm * temp) / std::sqrt(static_cast<double>(n));
            temp = list[n];
            list[n] = next;
            w += 2.0 * (rho[m * dim + n] * list[n]).real();
        }
    }
    return w;
}

void wigner_row(const cplx *rho, std::size_t dim, double p, const double *xs, std::size_t nx,
                double *out, double *work) {
    auto *list = reinterpret_cast<cplx *>(work);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::size_t i = 0; i < nx; ++i) {
        out[i] = wigner_point(rho, dim, cplx{xs[i] * inv_sqrt2, p * inv_sqrt2}, list);
    }
}

}  // namespace

const KernelTable kTable{Isa::scalar, matvec, matmul, matmul_adjoint, axpy, wigner_row};

}  // namespace qumem::kernels::scalar
