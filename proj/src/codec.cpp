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

#include "qumem/codec.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "qumem/error.hpp"

namespace qumem {
namespace {

void check_unit(double v, const char *what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw Error(ErrorKind::invalid_input,
                    std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
}

EntropyValue tag_state(const FockKet &state, NoiseParameter noise) {
    return von_neumann_entropy(gaussian_noise(ket_to_density(state), noise));
}

}  // namespace

EncodingGain::EncodingGain(double kappa) : kappa_(kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw Error(ErrorKind::invalid_parameter,
                    "encoding gain must be positive and finite, got " + std::to_string(kappa));
}

std::string_view to_string(Channel channel) noexcept {
    switch (channel) {
        case Channel::gray: return "gray";
        case Channel::r: return "r";
        case Channel::g: return "g";
        case Channel::b: return "b";
    }
    return "gray";
}

Channel parse_channel(std::string_view name) {
    if (name == "gray") return Channel::gray;
    if (name == "r") return Channel::r;
    if (name == "g") return Channel::g;
    if (name == "b") return Channel::b;
    throw Error(ErrorKind::parse, "unknown channel '" + std::string(name) + "'");
}

std::size_t CutoffPolicy::resolve(double max_amplitude) const {
    if (fixed) {
        if (*fixed == 0) throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 1");
        return *fixed;
    }
    return std::max<std::size_t>(16, required_cutoff(max_amplitude));
}

double accumulated_phase(std::span<const cplx> deltas) {
    cplx before{};
    double phase = 0.0;
    for (const cplx &d : deltas) {
        phase += (d * std::conj(before)).imag();
        before += d;
    }
    return phase;
}

FrameLedger::FrameLedger(EncodingGain gain, std::vector<cplx> deltas,
                         std::vector<EntropyValue> tags, std::size_t cutoff, NoiseParameter noise,
                         Channel channel, std::optional<PatchIndex> patch)
    : gain_(gain),
      deltas_(std::move(deltas)),
      tags_(std::move(tags)),
      cutoff_(cutoff),
      noise_(noise),
      channel_(channel),
      patch_(patch) {
    if (cutoff_ == 0) throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 1");
    if (tags_.size() != deltas_.size())
        throw Error(ErrorKind::invalid_argument,
                    "ledger has " + std::to_string(deltas_.size()) + " deltas but " +
                        std::to_string(tags_.size()) + " tags");
    for (const cplx &d : deltas_) {
        if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
            throw Error(ErrorKind::invalid_argument, "ledger delta is not finite");
        cumulative_ += d;
    }
    phase_ = accumulated_phase(deltas_);
}

cplx FrameLedger::partial_sum(std::size_t k) const {
    if (k > deltas_.size())
        throw Error(ErrorKind::out_of_range, "frame " + std::to_string(k) + " is past the last frame " +
                                                 std::to_string(deltas_.size()));
    cplx s{};
    for (std::size_t j = 0; j < k; ++j) s += deltas_[j];
    return s;
}

std::string FrameLedger::label() const {
    std::string out(to_string(channel_));
    if (patch_) out += "@" + std::to_string(patch_->row) + "," + std::to_string(patch_->col);
    return out;
}

FrameFeature frame_feature(std::span<const std::uint8_t> pixels) {
    if (pixels.empty()) throw Error(ErrorKind::invalid_input, "frame has no pixels");
    double sum = 0.0;
    for (std::uint8_t p : pixels) sum += p;
    return FrameFeature{sum / static_cast<double>(pixels.size()) / 255.0, std::nullopt};
}

FrameFeature frame_feature(const Image &image) {
    if (image.pixels.empty()) throw Error(ErrorKind::invalid_input, "frame has no pixels");
    const double scale = 1.0 / static_cast<double>(image.maxval);
    const std::size_t count = image.width * image.height;
    if (image.channels == 1) {
        double sum = 0.0;
        for (std::uint8_t p : image.pixels) sum += p;
        return FrameFeature{sum / static_cast<double>(count) * scale, std::nullopt};
    }
    if (image.channels != 3)
        throw Error(ErrorKind::invalid_input, "frames must have 1 or 3 channels");
    std::array<double, 3> sums{};
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t ch = 0; ch < 3; ++ch) sums[ch] += image.pixels[i * 3 + ch];
    std::array<double, 3> rgb{};
    for (std::size_t ch = 0; ch < 3; ++ch) rgb[ch] = sums[ch] / static_cast<double>(count) * scale;
    return FrameFeature{(rgb[0] + rgb[1] + rgb[2]) / 3.0, rgb};
}

std::vector<FrameFeature> patch_features(const Image &image, std::size_t grid) {
    if (grid == 0 || grid > image.width || grid > image.height)
        throw Error(ErrorKind::invalid_parameter,
                    "patch grid " + std::to_string(grid) + " does not fit a " +
                        std::to_string(image.width) + "x" + std::to_string(image.height) + " frame");
    std::vector<FrameFeature> out;
    out.reserve(grid * grid);
    for (std::size_t r = 0; r < grid; ++r) {
        const std::size_t r0 = r * image.height / grid;
        const std::size_t r1 = (r + 1) * image.height / grid;
        for (std::size_t c = 0; c < grid; ++c) {
            const std::size_t c0 = c * image.width / grid;
            const std::size_t c1 = (c + 1) * image.width / grid;
            Image cell;
            cell.width = c1 - c0;
            cell.height = r1 - r0;
            cell.channels = image.channels;
            cell.maxval = image.maxval;
            cell.pixels.reserve(cell.width * cell.height * cell.channels);
            for (std::size_t y = r0; y < r1; ++y)
                for (std::size_t x = c0; x < c1; ++x)
                    for (std::size_t ch = 0; ch < image.channels; ++ch)
                        cell.pixels.push_back(image.at(y, x, ch));
            out.push_back(frame_feature(cell));
        }
    }
    return out;
}

FrameLedger encode_amplitudes(std::span<const cplx> alphas, const EncoderOptions &options) {
    if (alphas.empty()) throw Error(ErrorKind::invalid_input, "cannot encode an empty sequence");
    double max_amp = 0.0;
    for (const cplx &a : alphas) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw Error(ErrorKind::invalid_input, "frame amplitude is not finite");
        if (std::abs(a) > options.amplitude_cap)
            throw Error(ErrorKind::gain_too_large,
                        "frame amplitude " + std::to_string(std::abs(a)) + " exceeds the cap " +
                            std::to_string(options.amplitude_cap) + "; lower the gain");
        max_amp = std::max(max_amp, std::abs(a));
    }
    const std::size_t cutoff = options.cutoff.resolve(max_amp);

    std::vector<cplx> deltas;
    std::vector<EntropyValue> tags;
    deltas.reserve(alphas.size());
    tags.reserve(alphas.size());
    FockKet state = vacuum(cutoff);
    cplx previous{};
    for (const cplx &a : alphas) {
        const cplx delta = a - previous;
        previous = a;
        // Deltas can reach twice the cap when the sequence swings across it.
        state = apply_displacement(state, Amplitude(delta, 2.0 * options.amplitude_cap));
        deltas.push_back(delta);
        tags.push_back(tag_state(state, options.noise));
    }
    return FrameLedger(options.gain, std::move(deltas), std::move(tags), cutoff, options.noise,
                       options.channel, options.patch);
}

FrameLedger encode_sequence(std::span<const double> intensities, const EncoderOptions &options) {
    std::vector<cplx> alphas;
    alphas.reserve(intensities.size());
    for (double v : intensities) {
        check_unit(v, "frame intensity");
        alphas.emplace_back(options.gain.kappa() * v, 0.0);
    }
    return encode_amplitudes(alphas, options);
}

FrameLedger encode_sequence(std::span<const FrameFeature> features, const EncoderOptions &options) {
    std::vector<double> intensities;
    intensities.reserve(features.size());
    for (const FrameFeature &f : features) intensities.push_back(f.intensity);
    return encode_sequence(intensities, options);
}

std::array<FrameLedger, 3> encode_rgb(std::span<const FrameFeature> features,
                                      const RgbGains &gains, const EncoderOptions &options) {
    std::array<std::vector<double>, 3> channels;
    for (const FrameFeature &f : features) {
        if (!f.rgb) throw Error(ErrorKind::invalid_input, "RGB encoding needs per-channel features");
        for (std::size_t ch = 0; ch < 3; ++ch) channels[ch].push_back((*f.rgb)[ch]);
    }
    const std::array<EncodingGain, 3> g{gains.r, gains.g, gains.b};
    const std::array<Channel, 3> names{Channel::r, Channel::g, Channel::b};
    // Channels share nothing, so they run concurrently; results are
    // collected in channel order.
    std::array<std::future<FrameLedger>, 3> jobs;
    for (std::size_t ch = 0; ch < 3; ++ch) {
        EncoderOptions opts = options;
        opts.gain = g[ch];
        opts.channel = names[ch];
        jobs[ch] = std::async(std::launch::async, [&channels, ch, opts] {
            return encode_sequence(std::span<const double>(channels[ch]), opts);
        });
    }
    return {jobs[0].get(), jobs[1].get(), jobs[2].get()};
}

FockKet current_state(const FrameLedger &ledger, StatePath path) {
    if (path == StatePath::direct)
        return coherent_ket(Amplitude(ledger.cumulative(), INFINITY), ledger.cutoff());
    FockKet state = vacuum(ledger.cutoff());
    for (const cplx &d : ledger.deltas()) state = apply_displacement(state, Amplitude(d, INFINITY));
    return state;
}

FockKet rewind(const FrameLedger &ledger, std::size_t k) {
    if (k > ledger.frame_count())
        throw Error(ErrorKind::out_of_range, "cannot rewind to frame " + std::to_string(k) +
                                                 " of a " + std::to_string(ledger.frame_count()) +
                                                 "-frame ledger");
    FockKet state = current_state(ledger, StatePath::sequential);
    for (std::size_t j = ledger.frame_count(); j > k; --j)
        state = apply_displacement(state, Amplitude(-ledger.deltas()[j - 1], INFINITY));
    return state;
}

FrameFeature decode_feature(const FrameLedger &ledger, std::size_t k) {
    const cplx alpha = ledger.partial_sum(k);
    return FrameFeature{std::clamp(alpha.real() / ledger.gain().kappa(), 0.0, 1.0), std::nullopt};
}

}  // namespace qumem
