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

#include "qumem/wigner_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "qumem/error.hpp"

namespace qumem {
namespace {

void append_real(std::string &out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

std::string wigner_csv(const WignerGrid &grid) {
    std::string out = "p\\x";
    for (double x : grid.x_values) {
        out += ',';
        append_real(out, x);
    }
    out += '\n';
    for (std::size_t ip = 0; ip < grid.p_values.size(); ++ip) {
        append_real(out, grid.p_values[ip]);
        for (std::size_t ix = 0; ix < grid.x_values.size(); ++ix) {
            out += ',';
            append_real(out, grid.at(ip, ix));
        }
        out += '\n';
    }
    return out;
}

Image wigner_heatmap(const WignerGrid &grid) {
    Image img;
    img.width = grid.x_values.size();
    img.height = grid.p_values.size();
    img.channels = 1;
    img.maxval = 255;
    img.pixels.assign(img.width * img.height, 0);
    if (grid.values.empty()) return img;
    const auto [lo, hi] = std::minmax_element(grid.values.begin(), grid.values.end());
    const double range = *hi - *lo;
    for (std::size_t ip = 0; ip < img.height; ++ip) {
        const std::size_t row = img.height - 1 - ip;
        for (std::size_t ix = 0; ix < img.width; ++ix) {
            const double t = range > 0.0 ? (grid.at(ip, ix) - *lo) / range : 0.0;
            img.pixels[row * img.width + ix] =
                static_cast<std::uint8_t>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0));
        }
    }
    return img;
}

void write_wigner_csv(const std::filesystem::path &path, const WignerGrid &grid) {
    const std::string text = wigner_csv(grid);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw Error(ErrorKind::io, path.string() + ": write failed");
}

void write_wigner_pgm(const std::filesystem::path &path, const WignerGrid &grid) {
    write_pnm(path, wigner_heatmap(grid));
}

}  // namespace qumem
