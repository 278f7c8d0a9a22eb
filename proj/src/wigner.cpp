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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "qumem/error.hpp"
#include "qumem/kernels.hpp"
#include "qumem/metrics.hpp"

namespace qumem {
namespace {

void check_axis(std::span<const double> axis, const char *name) {
    if (axis.empty())
        throw Error(ErrorKind::invalid_argument, std::string("empty Wigner grid axis ") + name);
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i]) || (i > 0 && !(axis[i] > axis[i - 1])))
            throw Error(ErrorKind::invalid_argument,
                        std::string("Wigner grid axis ") + name + " must be finite and strictly increasing");
    }
}

void wigner_by_recurrence(const DensityOperator &rho, WignerGrid &grid) {
    const std::size_t dim = rho.cutoff();
    const std::size_t nx = grid.x_values.size();
    const std::size_t np = grid.p_values.size();
    const kernels::KernelTable &k = kernels::active();
    const cplx *r = rho.matrix().data().data();

    // Rows are independent; each worker owns a contiguous block of rows and
    // its own scratch, so the result does not depend on the thread count.
    auto run_rows = [&](std::size_t begin, std::size_t end) {
        std::vector<double> work(kernels::wigner_work_size(dim));
        for (std::size_t ip = begin; ip < end; ++ip)
            k.wigner_row(r, dim, grid.p_values[ip], grid.x_values.data(), nx,
                         grid.values.data() + ip * nx, work.data());
    };

    const std::size_t cost = np * nx * dim * dim;
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = cost < (1u << 22) ? 1 : std::min<std::size_t>(hw, np);
    if (workers <= 1) {
        run_rows(0, np);
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (np + workers - 1) / workers;
    for (std::size_t begin = 0; begin < np; begin += chunk)
        pool.emplace_back(run_rows, begin, std::min(np, begin + chunk));
}

void wigner_by_parity(const DensityOperator &rho, WignerGrid &grid) {
    const std::size_t c = rho.cutoff();
    double mean_n = 0.0;
    for (std::size_t n = 0; n < c; ++n) mean_n += static_cast<double>(n) * rho(n, n).real();
    const double spread = std::sqrt(std::max(0.0, mean_n));
    const double no_cap = std::numeric_limits<double>::infinity();
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const std::size_t nx = grid.x_values.size();

    for (std::size_t ip = 0; ip < grid.p_values.size(); ++ip) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const cplx gamma{grid.x_values[ix] * inv_sqrt2, grid.p_values[ip] * inv_sqrt2};
            // D(-gamma) rho D(-gamma)^dagger needs room for the shifted state.
            const std::size_t big = c + required_cutoff(std::abs(gamma) + spread);
            const CMatrix d = displacement_matrix(Amplitude(-gamma, no_cap), big);
            CMatrix block(big, c);
            for (std::size_t i = 0; i < big; ++i)
                for (std::size_t j = 0; j < c; ++j) block(i, j) = d(i, j);
            const CMatrix t = block * rho.matrix();
            cplx parity{};
            for (std::size_t n = 0; n < big; ++n) {
                cplx diag{};
                for (std::size_t l = 0; l < c; ++l) diag += t(n, l) * std::conj(block(n, l));
                parity += (n % 2 == 0 ? 1.0 : -1.0) * diag;
            }
            const cplx w = parity / std::numbers::pi;
            grid.values[ip * nx + ix] = w.real();
            grid.imag_residue = std::max(grid.imag_residue, std::abs(w.imag()));
        }
    }
}

}  // namespace

double WignerGrid::riemann_sum() const {
    const double dx = x_values.size() > 1 ? x_values[1] - x_values[0] : 1.0;
    const double dp = p_values.size() > 1 ? p_values[1] - p_values[0] : 1.0;
    double s = 0.0;
    for (double v : values) s += v;
    return s * dx * dp;
}

WignerGrid wigner(const DensityOperator &rho, std::span<const double> x_values,
                  std::span<const double> p_values, WignerMethod method) {
    check_axis(x_values, "x");
    check_axis(p_values, "p");
    WignerGrid grid;
    grid.x_values.assign(x_values.begin(), x_values.end());
    grid.p_values.assign(p_values.begin(), p_values.end());
    grid.values.assign(x_values.size() * p_values.size(), 0.0);
    switch (method) {
        case WignerMethod::recurrence: wigner_by_recurrence(rho, grid); break;
        case WignerMethod::displaced_parity: wigner_by_parity(rho, grid); break;
    }
    return grid;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::invalid_argument, "linspace needs at least one point");
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
    out[n - 1] = hi;
    return out;
}

}  // namespace qumem
