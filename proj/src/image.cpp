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

#include "qumem/image.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qumem/error.hpp"

namespace qumem {
namespace {

class PnmReader {
  public:
    PnmReader(const std::string &bytes, const std::string &name) : bytes_(bytes), name_(name) {}

    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorKind::parse, name_ + ": " + what);
    }

    // Header tokens are separated by whitespace; '#' starts a comment.
    void skip_space() {
        while (pos_ < bytes_.size()) {
            const char ch = bytes_[pos_];
            if (ch == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    unsigned long number(const char *what) {
        skip_space();
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + static_cast<unsigned long>(bytes_[pos_] - '0');
            if (value > (1ul << 24)) fail(std::string(what) + " is too large");
            ++pos_;
        }
        if (pos_ == start) fail(std::string("expected ") + what);
        return value;
    }

    std::string magic() {
        if (bytes_.size() < 2 || bytes_[0] != 'P') fail("not a PNM file");
        pos_ = 2;
        return bytes_.substr(0, 2);
    }

    // Exactly one whitespace byte separates the header from binary data.
    void end_header() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_])))
            fail("malformed header terminator");
        ++pos_;
    }

    std::size_t remaining() const { return bytes_.size() - pos_; }
    const char *cursor() const { return bytes_.data() + pos_; }

  private:
    const std::string &bytes_;
    const std::string &name_;
    std::size_t pos_ = 0;
};

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, path.string() + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Image parse_pnm(const std::string &bytes, const std::string &name) {
    PnmReader r(bytes, name);
    const std::string magic = r.magic();
    Image img;
    bool ascii = false;
    if (magic == "P2" || magic == "P5") {
        img.channels = 1;
        ascii = magic == "P2";
    } else if (magic == "P3" || magic == "P6") {
        img.channels = 3;
        ascii = magic == "P3";
    } else {
        r.fail("unsupported PNM type " + magic + " (expected P2, P3, P5 or P6)");
    }
    img.width = r.number("width");
    img.height = r.number("height");
    const unsigned long maxval = r.number("maxval");
    if (img.width == 0 || img.height == 0) r.fail("image has zero size");
    if (maxval == 0 || maxval > 255) r.fail("maxval must be in 1..255");
    img.maxval = static_cast<unsigned>(maxval);

    const std::size_t count = img.width * img.height * img.channels;
    img.pixels.resize(count);
    if (ascii) {
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned long v = r.number("pixel value");
            if (v > maxval) r.fail("pixel value exceeds maxval");
            img.pixels[i] = static_cast<std::uint8_t>(v);
        }
    } else {
        r.end_header();
        if (r.remaining() < count) r.fail("truncated pixel data");
        const auto *src = reinterpret_cast<const std::uint8_t *>(r.cursor());
        for (std::size_t i = 0; i < count; ++i) {
            if (src[i] > maxval) r.fail("pixel value exceeds maxval");
            img.pixels[i] = src[i];
        }
    }
    return img;
}

Image read_pnm(const std::filesystem::path &path) { return parse_pnm(slurp(path), path.string()); }

std::string encode_pnm(const Image &image) {
    if (image.channels != 1 && image.channels != 3)
        throw Error(ErrorKind::invalid_argument, "PNM output needs 1 or 3 channels");
    if (image.pixels.size() != image.width * image.height * image.channels)
        throw Error(ErrorKind::invalid_argument, "pixel buffer does not match image size");
    std::string out = (image.channels == 1 ? "P5\n" : "P6\n") + std::to_string(image.width) +
                      " " + std::to_string(image.height) + "\n" +
                      std::to_string(image.maxval) + "\n";
    out.append(reinterpret_cast<const char *>(image.pixels.data()), image.pixels.size());
    return out;
}

void write_pnm(const std::filesystem::path &path, const Image &image) {
    const std::string bytes = encode_pnm(image);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, path.string() + ": cannot open for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::io, path.string() + ": write failed");
}

}  // namespace qumem
