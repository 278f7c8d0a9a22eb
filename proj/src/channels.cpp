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

#include "qumem/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qumem/error.hpp"
#include "qumem/special.hpp"

namespace qumem {
namespace {

// (M + M^dagger)/2 scaled to unit trace; returns the trace deficit.
double hermitize_and_normalize(CMatrix &m) {
    const std::size_t c = m.rows();
    for (std::size_t i = 0; i < c; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < c; ++j) {
            const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    const double tr = m.trace().real();
    m *= 1.0 / tr;
    return 1.0 - tr;
}

}  // namespace

LossParameter::LossParameter(double eta) : eta_(eta) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw Error(ErrorKind::invalid_parameter,
                    "loss transmissivity must lie in [0, 1], got " + std::to_string(eta));
}

NoiseParameter::NoiseParameter(double nbar) : nbar_(nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar))
        throw Error(ErrorKind::invalid_parameter,
                    "noise mean photon number must be >= 0, got " + std::to_string(nbar));
}

DensityOperator pure_loss(const DensityOperator &rho, LossParameter eta,
                          double leakage_tolerance) {
    const std::size_t c = rho.cutoff();
    const double e = eta.eta();
    CMatrix out(c, c);
    for (std::size_t k = 0; k < c; ++k) {
        // (K_k)_{m, m+k} = sqrt(C(m+k, k) (1-eta)^k eta^m)
        CMatrix kraus(c, c);
        double peak = 0.0;
        for (std::size_t m = 0; m + k < c; ++m) {
            const double log_binom = special::log_factorial(m + k) - special::log_factorial(m) -
                                     special::log_factorial(k);
            double w2 = 0.0;
            if ((k == 0 || e < 1.0) && (m == 0 || e > 0.0)) {
                const double log_w = log_binom + (k == 0 ? 0.0 : k * std::log1p(-e)) +
                                     (m == 0 ? 0.0 : m * std::log(e));
                w2 = std::exp(log_w);
            }
            kraus(m, m + k) = std::sqrt(w2);
            peak = std::max(peak, w2);
        }
        if (peak < kKrausWeightFloor) continue;
        out += conjugate(kraus, rho.matrix());
    }
    const double deficit = hermitize_and_normalize(out);
    if (deficit > leakage_tolerance)
        throw Error(ErrorKind::cutoff, "loss channel lost " + std::to_string(deficit) +
                                           " of the trace; increase the cutoff");
    return DensityOperator(std::move(out), rho.leakage() + std::max(0.0, deficit));
}

DensityOperator gaussian_noise(const DensityOperator &rho, NoiseParameter nbar,
                               double leakage_tolerance) {
    if (nbar.nbar() == 0.0) return rho;
    const std::size_t c = rho.cutoff();

    // beta = sqrt(nbar t) e^{i phi}; the Gaussian measure becomes
    // (1 / 2pi) e^{-t} dt dphi.
    const special::QuadratureRule radial = special::gauss_laguerre(kNoiseRadialNodes);
    const double no_cap = std::numeric_limits<double>::infinity();
    CMatrix out(c, c);
    for (std::size_t i = 0; i < kNoiseRadialNodes; ++i) {
        const double r = std::sqrt(nbar.nbar() * radial.nodes[i]);
        const double w = radial.weights[i] / static_cast<double>(kNoiseAngularNodes);
        for (std::size_t j = 0; j < kNoiseAngularNodes; ++j) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(kNoiseAngularNodes);
            const CMatrix d = displacement_matrix(Amplitude(std::polar(r, phi), no_cap), c);
            CMatrix term = conjugate(d, rho.matrix());
            term *= w;
            out += term;
        }
    }
    const double deficit = hermitize_and_normalize(out);
    if (deficit > leakage_tolerance)
        throw Error(ErrorKind::cutoff,
                    "noise channel with nbar " + std::to_string(nbar.nbar()) + " pushes " +
                        std::to_string(deficit) + " of the trace past cutoff " +
                        std::to_string(c) + "; increase the cutoff");
    return DensityOperator(std::move(out), rho.leakage() + std::max(0.0, deficit));
}

DensityOperator thermal_state(double nbar, std::size_t cutoff) {
    NoiseParameter checked(nbar);
    if (cutoff == 0) throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 1");
    CMatrix m(cutoff, cutoff);
    const double ratio = nbar / (nbar + 1.0);
    double p = 1.0 / (nbar + 1.0);
    for (std::size_t n = 0; n < cutoff; ++n, p *= ratio) m(n, n) = p;
    hermitize_and_normalize(m);
    return DensityOperator(std::move(m));
}

}  // namespace qumem
