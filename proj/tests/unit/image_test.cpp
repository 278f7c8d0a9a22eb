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

#include <gtest/gtest.h>

#include "qumem/image.hpp"
#include "support/expect_error.hpp"

namespace qumem {
namespace {

using test_support::error_kind;

TEST(Pnm, AsciiGraymapWithComments) {
    const Image img = parse_pnm("P2\n# a comment\n3 2\n# another\n255\n0 1 2\n253 254 255\n");
    ASSERT_EQ(img.width, 3u);
    ASSERT_EQ(img.height, 2u);
    EXPECT_EQ(img.channels, 1u);
    EXPECT_EQ(img.at(0, 2), 2);
    EXPECT_EQ(img.at(1, 0), 253);
}

TEST(Pnm, BinaryRoundTrip) {
    Image gray{4, 3, 1, 255, {}};
    for (std::size_t i = 0; i < 12; ++i) gray.pixels.push_back(static_cast<std::uint8_t>(i * 20));
    const Image g2 = parse_pnm(encode_pnm(gray));
    EXPECT_EQ(g2.pixels, gray.pixels);
    EXPECT_EQ(g2.width, 4u);

    Image rgb{2, 2, 3, 255, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}};
    const Image r2 = parse_pnm(encode_pnm(rgb));
    EXPECT_EQ(r2.channels, 3u);
    EXPECT_EQ(r2.pixels, rgb.pixels);
    EXPECT_EQ(r2.at(1, 1, 2), 12);
}

TEST(Pnm, AsciiPixmap) {
    const Image img = parse_pnm("P3 1 1 255 10 20 30");
    EXPECT_EQ(img.channels, 3u);
    EXPECT_EQ(img.at(0, 0, 1), 20);
}

TEST(Pnm, BinaryDataMayStartWithWhitespaceByte) {
    std::string bytes = "P5\n2 1\n255\n";
    bytes.push_back('\n');  // pixel value 10
    bytes.push_back(' ');   // pixel value 32
    const Image img = parse_pnm(bytes);
    EXPECT_EQ(img.pixels, (std::vector<std::uint8_t>{10, 32}));
}

TEST(Pnm, MalformedInputsAreParseErrors) {
    EXPECT_EQ(error_kind([] { parse_pnm("hello"); }), ErrorKind::parse);
    EXPECT_EQ(error_kind([] { parse_pnm("P4\n1 1\n"); }), ErrorKind::parse);
    EXPECT_EQ(error_kind([] { parse_pnm("P5\n2 2\n255\nab"); }), ErrorKind::parse);
    EXPECT_EQ(error_kind([] { parse_pnm("P2\n2 1\n255\n1 300\n"); }), ErrorKind::parse);
    EXPECT_EQ(error_kind([] { parse_pnm("P2\n0 1\n255\n"); }), ErrorKind::parse);
    EXPECT_EQ(error_kind([] { parse_pnm("P5\n1 1\n65535\n\x01\x02"); }), ErrorKind::parse);
}

TEST(Pnm, ErrorMessageNamesFile) {
    try {
        parse_pnm("P7", "frame_003.pgm");
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("frame_003.pgm"), std::string::npos);
    }
}

TEST(Pnm, MissingFileIsIoError) {
    EXPECT_EQ(error_kind([] { read_pnm("/nonexistent/frame.pgm"); }), ErrorKind::io);
}

}  // namespace
}  // namespace qumem
