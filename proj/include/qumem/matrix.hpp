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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qumem {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Storage is contiguous so rows can be
/// handed to the kernels as spans.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    cplx &operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const cplx &operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }
    std::span<const cplx> row(std::size_t i) const noexcept {
        return std::span<const cplx>(data_).subspan(i * cols_, cols_);
    }

    CMatrix adjoint() const;
    cplx trace() const;

    /// max_ij |M_ij - conj(M_ji)|
    double hermiticity_error() const;

    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator*=(cplx s);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// max_ij |A_ij - B_ij|; shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// A * B^dagger
CMatrix multiply_adjoint(const CMatrix &a, const CMatrix &b);

/// U * M * U^dagger, the conjugation used by every channel.
CMatrix conjugate(const CMatrix &u, const CMatrix &m);

}  // namespace qumem
