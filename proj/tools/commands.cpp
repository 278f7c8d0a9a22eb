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


#include "commands.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <set>

#include "qumem/codec.hpp"
#include "qumem/entropy_index.hpp"
#include "qumem/error.hpp"
#include "qumem/ledger_io.hpp"
#include "qumem/metrics.hpp"
#include "qumem/wigner_io.hpp"

namespace qumem::cli {
namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

FrameLedger load(const LedgerRef &ref) {
    std::vector<FrameLedger> all = read_ledger_file(ref.path);
    if (ref.entry >= all.size())
        throw Error(ErrorKind::out_of_range, ref.path + ": entry " + std::to_string(ref.entry) +
                                                 " requested but the file holds " +
                                                 std::to_string(all.size()) + " ledger(s)");
    return std::move(all[ref.entry]);
}

void check_frame(const FrameLedger &ledger, std::size_t k) {
    if (k > ledger.frame_count())
        throw Error(ErrorKind::out_of_range, "frame " + std::to_string(k) + " is past the end of a " +
                                                 std::to_string(ledger.frame_count()) + "-frame ledger");
}

std::size_t parse_count(const std::string &text, const std::string &axis) {
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
        n = std::stoull(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-')
        throw Error(ErrorKind::invalid_argument, "grid '" + axis + "': bad point count '" + text + "'");
    return static_cast<std::size_t>(n);
}

double parse_real(const std::string &text, const std::string &axis) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty() || !std::isfinite(v))
        throw Error(ErrorKind::invalid_argument, "grid '" + axis + "': bad bound '" + text + "'");
    return v;
}

// One encoding job: a frame-indexed feature sequence for one patch.
struct Cell {
    std::optional<PatchIndex> patch;
    std::vector<FrameFeature> features;
};

}  // namespace

std::vector<double> parse_grid(const std::string &axis) {
    const auto a = axis.find(':');
    const auto b = a == std::string::npos ? a : axis.find(':', a + 1);
    if (a == std::string::npos || b == std::string::npos || axis.find(':', b + 1) != std::string::npos)
        throw Error(ErrorKind::invalid_argument, "grid '" + axis + "' is not of the form min:max:n");
    const double lo = parse_real(axis.substr(0, a), axis);
    const double hi = parse_real(axis.substr(a + 1, b - a - 1), axis);
    const std::size_t n = parse_count(axis.substr(b + 1), axis);
    if (n < 2) throw Error(ErrorKind::invalid_argument, "grid '" + axis + "' needs at least 2 points");
    if (!(hi > lo)) throw Error(ErrorKind::invalid_argument, "grid '" + axis + "' needs min < max");
    return linspace(lo, hi, n);
}

void run_encode(const EncodeArgs &args, std::ostream &out) {
    if (args.images.empty()) throw Error(ErrorKind::usage, "encode needs at least one image");
    EncoderOptions opts;
    opts.gain = EncodingGain(args.kappa);
    opts.noise = NoiseParameter(args.nbar);
    if (args.cutoff) {
        if (*args.cutoff < 2) throw Error(ErrorKind::invalid_dimension, "cutoff must be at least 2");
        opts.cutoff.fixed = args.cutoff;
    }
    const RgbGains gains{EncodingGain(args.kappa_r.value_or(args.kappa)),
                         EncodingGain(args.kappa_g.value_or(args.kappa)),
                         EncodingGain(args.kappa_b.value_or(args.kappa))};
    if (args.patch && *args.patch == 0)
        throw Error(ErrorKind::invalid_parameter, "patch grid must be at least 1");

    std::vector<Image> frames;
    frames.reserve(args.images.size());
    for (const std::string &path : args.images) {
        frames.push_back(read_pnm(path));
        const Image &first = frames.front(), &cur = frames.back();
        if (cur.width != first.width || cur.height != first.height || cur.channels != first.channels)
            throw Error(ErrorKind::dimension_mismatch,
                        path + " is " + std::to_string(cur.width) + "x" + std::to_string(cur.height) +
                            "x" + std::to_string(cur.channels) + " but " + args.images.front() + " is " +
                            std::to_string(first.width) + "x" + std::to_string(first.height) + "x" +
                            std::to_string(first.channels));
    }
    const bool rgb = frames.front().channels == 3;

    std::vector<Cell> cells;
    if (args.patch) {
        const std::size_t g = *args.patch;
        cells.resize(g * g);
        for (std::size_t i = 0; i < cells.size(); ++i) cells[i].patch = PatchIndex{i / g, i % g};
        for (const Image &img : frames) {
            const auto f = patch_features(img, g);
            for (std::size_t i = 0; i < cells.size(); ++i) cells[i].features.push_back(f[i]);
        }
    } else {
        cells.resize(1);
        for (const Image &img : frames) cells[0].features.push_back(frame_feature(img));
    }

    std::vector<std::future<std::vector<FrameLedger>>> jobs;
    for (const Cell &cell : cells) {
        EncoderOptions o = opts;
        o.patch = cell.patch;
        jobs.push_back(std::async(std::launch::async, [&cell, o, gains, rgb] {
            if (!rgb) return std::vector<FrameLedger>{encode_sequence(cell.features, o)};
            auto three = encode_rgb(cell.features, gains, o);
            return std::vector<FrameLedger>(three.begin(), three.end());
        }));
    }
    std::vector<FrameLedger> ledgers;
    std::vector<const Cell *> owner;
    for (std::size_t i = 0; i < jobs.size(); ++i)
        for (FrameLedger &l : jobs[i].get()) {
            ledgers.push_back(std::move(l));
            owner.push_back(&cells[i]);
        }

    write_ledger_file(args.output, ledgers);

    for (std::size_t i = 0; i < ledgers.size(); ++i) {
        const FrameLedger &l = ledgers[i];
        out << "# ledger " << i << " " << l.label() << " kappa=" << g17(l.gain().kappa())
            << " nbar=" << g17(l.noise().nbar()) << " cutoff=" << l.cutoff() << "\n";
        out << "frame\tintensity\tdelta_re\tdelta_im\ttag_bits\n";
        for (std::size_t k = 0; k < l.frame_count(); ++k) {
            const FrameFeature &f = owner[i]->features[k];
            double intensity = f.intensity;
            if (l.channel() != Channel::gray)
                intensity = (*f.rgb)[static_cast<std::size_t>(l.channel()) - 1];
            out << (k + 1) << "\t" << g17(intensity) << "\t" << g17(l.deltas()[k].real()) << "\t"
                << g17(l.deltas()[k].imag()) << "\t" << g17(l.tags()[k].bits()) << "\n";
        }
    }
}

void run_rewind(const RewindArgs &args, std::ostream &out) {
    if (args.samples && *args.samples == 0)
        throw Error(ErrorKind::invalid_parameter, "--samples must be at least 1");
    const FrameLedger ledger = load(args.ledger);
    check_frame(ledger, args.k);
    const FockKet state = rewind(ledger, args.k);
    write_text_file(args.output, state_to_json(state).dump(2) + "\n");
    const cplx alpha = ledger.partial_sum(args.k);
    out << "frame " << args.k << " alpha " << g17(alpha.real()) << " " << g17(alpha.imag())
        << " cutoff " << state.cutoff() << "\n";
    if (args.samples) {
        std::map<std::size_t, std::size_t> counts;
        for (std::size_t n : sample_fock(state, args.seed, *args.samples)) ++counts[n];
        out << "photons\tcount\n";
        for (const auto &[n, c] : counts) out << n << "\t" << c << "\n";
    }
}

void run_decode(const DecodeArgs &args, std::ostream &out) {
    const FrameLedger ledger = load(args.ledger);
    std::size_t first = 1, last = ledger.frame_count();
    if (args.k) {
        check_frame(ledger, *args.k);
        first = last = *args.k;
    }
    out << "frame\tintensity\n";
    for (std::size_t k = first; k <= last; ++k)
        out << k << "\t" << g17(decode_feature(ledger, k).intensity) << "\n";
}

void run_wigner(const WignerArgs &args, std::ostream &out) {
    const std::vector<double> axis = parse_grid(args.grid);
    const FrameLedger ledger = load(args.ledger);
    check_frame(ledger, args.k);
    const WignerGrid grid = wigner(ket_to_density(rewind(ledger, args.k)), axis, axis);
    write_wigner_csv(args.prefix + ".csv", grid);
    write_wigner_pgm(args.prefix + ".pgm", grid);
    const auto peak = std::max_element(grid.values.begin(), grid.values.end()) - grid.values.begin();
    const std::size_t nx = grid.x_values.size();
    out << "peak " << g17(grid.values[peak]) << " at x=" << g17(grid.x_values[peak % nx])
        << " p=" << g17(grid.p_values[peak / nx]) << "\n";
    out << "integral " << g17(grid.riemann_sum()) << "\n";
    out << "wrote " << args.prefix << ".csv " << args.prefix << ".pgm\n";
}

void run_fidelity(const FidelityArgs &args, std::ostream &out) {
    const FrameLedger ledger = load(args.ledger);
    check_frame(ledger, args.k);
    check_frame(ledger, args.j);
    const double f = fidelity_pure(rewind(ledger, args.k), rewind(ledger, args.j));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", f);
    out << buf << "\n";
}

void run_entropy(const EntropyArgs &args, std::ostream &out) {
    const std::vector<FrameLedger> ledgers = read_ledger_file(args.path);
    for (std::size_t i = 0; i < ledgers.size(); ++i) {
        const FrameLedger &l = ledgers[i];
        out << "# ledger " << i << " " << l.label() << "\n";
        out << "frame\t" << (args.nats ? "tag_nats" : "tag_bits") << "\n";
        for (std::size_t k = 0; k < l.frame_count(); ++k) {
            const EntropyValue &t = l.tags()[k];
            out << (k + 1) << "\t" << g17(args.nats ? t.nats() : t.bits()) << "\n";
        }
    }
}

void run_index_build(const IndexBuildArgs &args, std::ostream &out) {
    IndexRegistry registry(args.width);
    for (const std::string &path : args.ledgers)
        for (const FrameLedger &l : read_ledger_file(path))
            for (std::size_t k = 0; k < l.frame_count(); ++k)
                registry.add(path + "#" + l.label(), k + 1, l.tags()[k]);
    write_index_file(args.output, registry);
    std::set<std::int64_t> buckets;
    for (const IndexEntry &e : registry.entries()) buckets.insert(e.bucket);
    out << "indexed " << registry.size() << " frames in " << buckets.size() << " buckets (width "
        << g17(registry.width()) << " bits)\n";
}

void run_index_query(const IndexQueryArgs &args, std::ostream &out) {
    const EntropyValue tag(args.tag);
    if (!(args.tolerance >= 0.0))
        throw Error(ErrorKind::invalid_parameter, "--tol must be >= 0");
    const IndexRegistry registry = read_index_file(args.index);
    out << "ledger\tframe\ttag_bits\tdistance\n";
    for (const IndexEntry &e : registry.lookup(tag, args.tolerance))
        out << e.ledger_id << "\t" << e.frame << "\t" << g17(e.tag.bits()) << "\t"
            << g17(std::abs(e.tag.bits() - tag.bits())) << "\n";
}

}  // namespace qumem::cli
