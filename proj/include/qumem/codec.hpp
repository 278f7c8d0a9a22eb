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

// Delta-evolved frame memory.
//
// A sequence of frame intensities I_1..I_N becomes amplitudes alpha_k = kappa I_k
// (alpha_0 = 0). The qumode is driven by the differences
// delta_k = alpha_k - alpha_{k-1}, so after k steps it holds
// D(delta_k)...D(delta_1)|0> = e^{i phi_k} |alpha_k>, with the global phase
// phi_k = sum_j Im(delta_j conj(alpha_{j-1})) recorded in the ledger. Each
// frame is tagged with the entropy of its state after a random displacement
// channel. Frames are retrieved either as states (inverse displacements) or
// as intensities (partial sums of the deltas).

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qumem/channels.hpp"
#include "qumem/fock.hpp"
#include "qumem/image.hpp"
#include "qumem/metrics.hpp"

namespace qumem {

/// Amplitude per unit normalized intensity.
class EncodingGain {
  public:
    explicit EncodingGain(double kappa = 1.0);
    double kappa() const noexcept { return kappa_; }

  private:
    double kappa_;
};

struct RgbGains {
    EncodingGain r;
    EncodingGain g;
    EncodingGain b;
};

/// Normalized mean intensity of a frame, plus per-channel means for RGB input.
struct FrameFeature {
    double intensity = 0.0;
    std::optional<std::array<double, 3>> rgb;
};

enum class Channel { gray, r, g, b };
std::string_view to_string(Channel channel) noexcept;
Channel parse_channel(std::string_view name);

struct PatchIndex {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const PatchIndex &, const PatchIndex &) = default;
};

/// Fixed cutoff, or max(16, ceil(A^2 + 6A + 10)) for the largest cumulative
/// amplitude A in the ledger.
struct CutoffPolicy {
    std::optional<std::size_t> fixed;
    std::size_t resolve(double max_amplitude) const;
};

inline constexpr double kDefaultTagNoise = 0.5;

struct EncoderOptions {
    EncodingGain gain{1.0};
    NoiseParameter noise{kDefaultTagNoise};
    CutoffPolicy cutoff{};
    double amplitude_cap = kDefaultAmplitudeCap;
    Channel channel = Channel::gray;
    std::optional<PatchIndex> patch;
};

/// Classical record of one encoded channel (or patch). Immutable; the
/// cumulative amplitude and phase are derived from the deltas on
/// construction.
class FrameLedger {
  public:
    FrameLedger(EncodingGain gain, std::vector<cplx> deltas, std::vector<EntropyValue> tags,
                std::size_t cutoff, NoiseParameter noise, Channel channel = Channel::gray,
                std::optional<PatchIndex> patch = std::nullopt);

    EncodingGain gain() const noexcept { return gain_; }
    std::span<const cplx> deltas() const noexcept { return deltas_; }
    std::span<const EntropyValue> tags() const noexcept { return tags_; }
    std::size_t frame_count() const noexcept { return deltas_.size(); }
    std::size_t cutoff() const noexcept { return cutoff_; }
    NoiseParameter noise() const noexcept { return noise_; }
    Channel channel() const noexcept { return channel_; }
    const std::optional<PatchIndex> &patch() const noexcept { return patch_; }

    /// alpha_N = sum of all deltas.
    cplx cumulative() const noexcept { return cumulative_; }
    /// sum_k Im(delta_k conj(alpha_{k-1})) in radians.
    double phase() const noexcept { return phase_; }

    /// alpha_k = delta_1 + ... + delta_k; alpha_0 = 0.
    cplx partial_sum(std::size_t k) const;

    /// Label used as the ledger part of index entries, e.g. "gray" or "r@1,2".
    std::string label() const;

  private:
    EncodingGain gain_;
    std::vector<cplx> deltas_;
    std::vector<EntropyValue> tags_;
    std::size_t cutoff_;
    NoiseParameter noise_;
    Channel channel_;
    std::optional<PatchIndex> patch_;
    cplx cumulative_{};
    double phase_ = 0.0;
};

/// sum_k Im(delta_k conj(alpha_{k-1})), recomputed from scratch.
double accumulated_phase(std::span<const cplx> deltas);

/// Mean of 8-bit pixel values divided by 255.
FrameFeature frame_feature(std::span<const std::uint8_t> pixels);

/// Mean over the image divided by its maxval; RGB images also fill `rgb`
/// and report the mean of the three channels as `intensity`.
FrameFeature frame_feature(const Image &image);

/// One feature per cell of a grid x grid split, row-major. Cell (r, c)
/// covers rows [r H / grid, (r+1) H / grid) and likewise for columns.
std::vector<FrameFeature> patch_features(const Image &image, std::size_t grid);

/// Encodes target amplitudes alpha_1..alpha_N directly (alpha_0 = 0).
FrameLedger encode_amplitudes(std::span<const cplx> alphas, const EncoderOptions &options);

/// Encodes intensities in [0, 1] with alpha_k = kappa I_k.
FrameLedger encode_sequence(std::span<const double> intensities, const EncoderOptions &options);
FrameLedger encode_sequence(std::span<const FrameFeature> features, const EncoderOptions &options);

/// Three independent ledgers (r, g, b), one qumode each.
std::array<FrameLedger, 3> encode_rgb(std::span<const FrameFeature> features,
                                      const RgbGains &gains, const EncoderOptions &options);

enum class StatePath {
    /// Apply every delta in order to the vacuum.
    sequential,
    /// coherent_ket(cumulative); differs from sequential by the global phase.
    direct,
};

FockKet current_state(const FrameLedger &ledger, StatePath path = StatePath::sequential);

/// Undo deltas N..k+1 on the current state. k = 0 returns (approximately)
/// the vacuum.
FockKet rewind(const FrameLedger &ledger, std::size_t k);

/// alpha_k / kappa clamped to [0, 1].
FrameFeature decode_feature(const FrameLedger &ledger, std::size_t k);

}  // namespace qumem
