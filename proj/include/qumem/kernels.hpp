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

// Data-parallel inner loops. Every kernel has a portable scalar reference
// and, where the build and the host allow it, an AVX2/FMA variant. The
// variant is chosen once at first use from CPUID and can be overridden for
// equivalence testing.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qumem/matrix.hpp"

namespace qumem::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Function table for one instruction set. All matrices are row-major.
struct KernelTable {
    Isa isa;

    /// y[rows] = A[rows x cols] * x[cols]
    void (*matvec)(const cplx *a, const cplx *x, cplx *y, std::size_t rows, std::size_t cols);

    /// C[n x m] = A[n x k] * B[k x m]
    void (*matmul)(const cplx *a, const cplx *b, cplx *c, std::size_t n, std::size_t k,
                   std::size_t m);

    /// C[n x m] = A[n x k] * B[m x k]^dagger
    void (*matmul_adjoint)(const cplx *a, const cplx *b, cplx *c, std::size_t n,
                           std::size_t k, std::size_t m);

    /// y[n] += w * x[n] for real w
    void (*axpy)(double w, const cplx *x, cplx *y, std::size_t n);

    /// Wigner function of a dim x dim density matrix along one row of fixed
    /// momentum p, one value per entry of xs. `work` must hold 2*dim doubles
    /// per simultaneously evaluated point (see wigner_work_size).
    void (*wigner_row)(const cplx *rho, std::size_t dim, double p, const double *xs,
                       std::size_t nx, double *out, double *work);
};

/// Table in use: the override if one is set, otherwise the best supported ISA.
const KernelTable &active();

/// Table for a specific ISA; throws Error(invalid_argument) when that ISA was
/// not compiled in or the CPU does not support it.
const KernelTable &table(Isa isa);

/// ISAs that are both compiled in and supported by the running CPU.
std::vector<Isa> available();

/// Pin dispatch to one ISA (tests and benchmarks). Not thread-safe with
/// respect to concurrent kernel calls.
void force(Isa isa);
void reset();

/// Scratch doubles required by wigner_row for a given dimension.
std::size_t wigner_work_size(std::size_t dim) noexcept;

}  // namespace qumem::kernels
