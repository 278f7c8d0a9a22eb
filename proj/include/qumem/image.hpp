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

// Netpbm images: P2/P5 graymaps and P3/P6 pixmaps with maxval <= 255.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qumem {

struct Image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 1;  // 1 = gray, 3 = RGB (interleaved)
    unsigned maxval = 255;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(std::size_t row, std::size_t col, std::size_t channel = 0) const {
        return pixels[(row * width + col) * channels + channel];
    }
};

/// Parses a PNM stream. `name` only labels error messages.
Image parse_pnm(const std::string &bytes, const std::string &name = "<memory>");
Image read_pnm(const std::filesystem::path &path);

/// Binary P5 (channels == 1) or P6 (channels == 3).
std::string encode_pnm(const Image &image);
void write_pnm(const std::filesystem::path &path, const Image &image);

}  // namespace qumem
