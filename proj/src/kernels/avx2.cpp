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

// Compiled with -mavx2 -mfma; only reached when CPUID reports both.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "tables.hpp"

namespace qumem::kernels::avx2 {
namespace {

// Two complex doubles per register, interleaved [re0, im0, re1, im1].
inline __m256d load2(const cplx *p) { return _mm256_loadu_pd(reinterpret_cast<const double *>(p)); }
inline void store2(cplx *p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double *>(p), v); }
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }
inline __m256d dup_re(__m256d v) { return _mm256_movedup_pd(v); }
inline __m256d dup_im(__m256d v) { return _mm256_permute_pd(v, 0b1111); }

inline cplx hsum(__m256d v) {
    const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
    alignas(16) std::array<double, 2> out;
    _mm_store_pd(out.data(), s);
    return {out[0], out[1]};
}

void matvec(const cplx *a, const cplx *x, cplx *y, std::size_t rows, std::size_t cols) {
    const std::size_t even = cols & ~std::size_t{1};
    for (std::size_t i = 0; i < rows; ++i) {
        const cplx *row = a + i * cols;
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        for (std::size_t j = 0; j < even; j += 2) {
            const __m256d av = load2(row + j);
            const __m256d xv = load2(x + j);
            acc_re = _mm256_fmadd_pd(dup_re(av), xv, acc_re);
            acc_im = _mm256_fmadd_pd(dup_im(av), swap_re_im(xv), acc_im);
        }
        cplx sum = hsum(_mm256_addsub_pd(acc_re, acc_im));
        if (even != cols) sum += row[even] * x[even];
        y[i] = sum;
    }
}

void matmul(const cplx *a, const cplx *b, cplx *c, std::size_t n, std::size_t k,
            std::size_t m) {
    const std::size_t even = m & ~std::size_t{1};
    for (std::size_t i = 0; i < n; ++i) {
        cplx *crow = c + i * m;
        for (std::size_t j = 0; j < m; ++j) crow[j] = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            const cplx s = a[i * k + l];
            if (s == cplx{}) continue;
            const __m256d sr = _mm256_set1_pd(s.real());
            const __m256d si = _mm256_set1_pd(s.imag());
            const cplx *brow = b + l * m;
            for (std::size_t j = 0; j < even; j += 2) {
                const __m256d bv = load2(brow + j);
                const __m256d prod = _mm256_fmaddsub_pd(sr, bv, _mm256_mul_pd(si, swap_re_im(bv)));
                store2(crow + j, _mm256_add_pd(load2(crow + j), prod));
            }
            if (even != m) crow[even] += s * brow[even];
        }
    }
}

void matmul_adjoint(const cplx *a, const cplx *b, cplx *c, std::size_t n, std::size_t k,
                    std::size_t m) {
    const std::size_t even = k & ~std::size_t{1};
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx *arow = a + i * k;
        for (std::size_t j = 0; j < m; ++j) {
            const cplx *brow = b + j * k;
            __m256d acc_re = zero;
            __m256d acc_im = zero;
            for (std::size_t l = 0; l < even; l += 2) {
                const __m256d av = load2(arow + l);
                const __m256d bv = load2(brow + l);
                acc_re = _mm256_fmadd_pd(dup_re(bv), av, acc_re);
                acc_im = _mm256_fmadd_pd(dup_im(bv), swap_re_im(av), acc_im);
            }
            // even lanes: br*ar + bi*ai, odd lanes: br*ai - bi*ar
            cplx sum = hsum(_mm256_addsub_pd(acc_re, _mm256_sub_pd(zero, acc_im)));
            if (even != k) sum += arow[even] * std::conj(brow[even]);
            c[i * m + j] = sum;
        }
    }
}

void axpy(double w, const cplx *x, cplx *y, std::size_t n) {
    const __m256d wv = _mm256_set1_pd(w);
    const std::size_t even = n & ~std::size_t{1};
    for (std::size_t i = 0; i < even; i += 2) {
        store2(y + i, _mm256_fmadd_pd(wv, load2(x + i), load2(y + i)));
    }
    if (even != n) y[even] += w * x[even];
}

// Four grid points per pass, split into separate real and imaginary lanes.
struct C4 {
    __m256d re;
    __m256d im;
};

inline C4 cmul(C4 a, C4 b) {
    return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
            _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

// Re(s * v) accumulated into acc with weight.
inline __m256d acc_re_prod(__m256d acc, cplx s, C4 v, double weight) {
    const __m256d sr = _mm256_set1_pd(weight * s.real());
    const __m256d si = _mm256_set1_pd(weight * s.imag());
    return _mm256_fnmadd_pd(si, v.im, _mm256_fmadd_pd(sr, v.re, acc));
}

void wigner_row(const cplx *rho, std::size_t dim, double p, const double *xs, std::size_t nx,
                double *out, double *work) {
    constexpr std::size_t kLanes = 4;
    double *list_re = work;
    double *list_im = work + kLanes * dim;
    auto load_l = [&](std::size_t n) {
        return C4{_mm256_loadu_pd(list_re + kLanes * n), _mm256_loadu_pd(list_im + kLanes * n)};
    };
    auto store_l = [&](std::size_t n, C4 v) {
        _mm256_storeu_pd(list_re + kLanes * n, v.re);
        _mm256_storeu_pd(list_im + kLanes * n, v.im);
    };

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const double ai = p * inv_sqrt2;
    for (std::size_t base = 0; base < nx; base += kLanes) {
        alignas(32) std::array<double, kLanes> ar{};
        alignas(32) std::array<double, kLanes> w0{};
        for (std::size_t lane = 0; lane < kLanes; ++lane) {
            // Pad the tail by repeating the last point; padded lanes are not stored.
            const std::size_t idx = std::min(base + lane, nx - 1);
            ar[lane] = xs[idx] * inv_sqrt2;
            w0[lane] = std::exp(-2.0 * (ar[lane] * ar[lane] + ai * ai)) / std::numbers::pi;
        }
        const C4 two_a{_mm256_mul_pd(_mm256_set1_pd(2.0), _mm256_load_pd(ar.data())),
                       _mm256_set1_pd(2.0 * ai)};
        const C4 two_ac{two_a.re, _mm256_set1_pd(-2.0 * ai)};

        C4 first{_mm256_load_pd(w0.data()), _mm256_setzero_pd()};
        store_l(0, first);
        __m256d w = _mm256_mul_pd(_mm256_set1_pd(rho[0].real()), first.re);
        for (std::size_t n = 1; n < dim; ++n) {
            const __m256d inv = _mm256_set1_pd(1.0 / std::sqrt(static_cast<double>(n)));
            C4 v = cmul(two_a, load_l(n - 1));
            v = {_mm256_mul_pd(v.re, inv), _mm256_mul_pd(v.im, inv)};
            store_l(n, v);
            w = acc_re_prod(w, rho[n], v, 2.0);
        }
        for (std::size_t m = 1; m < dim; ++m) {
            const double sm = std::sqrt(static_cast<double>(m));
            const __m256d smv = _mm256_set1_pd(sm);
            const __m256d inv_sm = _mm256_set1_pd(1.0 / sm);
            C4 temp = load_l(m);
            {
                const C4 t = cmul(two_ac, temp);
                const C4 prev = load_l(m - 1);
                const C4 v{_mm256_mul_pd(_mm256_fnmadd_pd(smv, prev.re, t.re), inv_sm),
                           _mm256_mul_pd(_mm256_fnmadd_pd(smv, prev.im, t.im), inv_sm)};
                store_l(m, v);
                w = acc_re_prod(w, rho[m * dim + m], v, 1.0);
            }
            for (std::size_t n = m + 1; n < dim; ++n) {
                const __m256d inv_sn = _mm256_set1_pd(1.0 / std::sqrt(static_cast<double>(n)));
                const C4 t = cmul(two_a, load_l(n - 1));
                const C4 next{_mm256_mul_pd(_mm256_fnmadd_pd(smv, temp.re, t.re), inv_sn),
                              _mm256_mul_pd(_mm256_fnmadd_pd(smv, temp.im, t.im), inv_sn)};
                temp = load_l(n);
                store_l(n, next);
                w = acc_re_prod(w, rho[m * dim + n], next, 2.0);
            }
        }
        alignas(32) std::array<double, kLanes> result;
        _mm256_store_pd(result.data(), w);
        for (std::size_t lane = 0; lane < kLanes && base + lane < nx; ++lane) {
            out[base + lane] = result[lane];
        }
    }
}

}  // namespace

const KernelTable kTable{Isa::avx2, matvec, matmul, matmul_adjoint, axpy, wigner_row};

}  // namespace qumem::kernels::avx2
