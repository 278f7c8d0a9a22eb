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

#include "qumem/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qumem/error.hpp"
#include "qumem/kernels.hpp"

namespace qumem {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx CMatrix::trace() const {
    cplx t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::hermiticity_error() const {
    if (!square()) return INFINITY;
    double err = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return err;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::dimension_mismatch, "matrix product shape mismatch");
    CMatrix c(a.rows(), b.cols());
    kernels::active().matmul(a.data().data(), b.data().data(), c.data().data(), a.rows(),
                             a.cols(), b.cols());
    return c;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::dimension_mismatch, "matrix sum shape mismatch");
    kernels::active().axpy(1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

CMatrix &CMatrix::operator*=(cplx s) {
    for (auto &v : data_) v *= s;
    return *this;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::dimension_mismatch, "matrix comparison shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
    return d;
}

CMatrix multiply_adjoint(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.cols())
        throw Error(ErrorKind::dimension_mismatch, "adjoint product shape mismatch");
    CMatrix c(a.rows(), b.rows());
    kernels::active().matmul_adjoint(a.data().data(), b.data().data(), c.data().data(),
                                     a.rows(), a.cols(), b.rows());
    return c;
}

CMatrix conjugate(const CMatrix &u, const CMatrix &m) { return multiply_adjoint(u * m, u); }

}  // namespace qumem
