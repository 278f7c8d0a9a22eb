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

#include <random>

#include "qumem/entropy_index.hpp"
#include "support/expect_error.hpp"

namespace qumem {
namespace {

using test_support::error_kind;

TEST(Registry, Buckets) {
    IndexRegistry reg(0.05);
    EXPECT_EQ(reg.add("a", 1, EntropyValue(0.5828)).bucket, 11);
    EXPECT_EQ(reg.add("a", 2, EntropyValue(0.0)).bucket, 0);
    EXPECT_EQ(reg.add("a", 3, EntropyValue(0.4287)).bucket, 8);
}

TEST(Registry, DuplicateRejected) {
    IndexRegistry reg;
    reg.add("L", 1, EntropyValue(0.3));
    EXPECT_EQ(error_kind([&] { reg.add("L", 1, EntropyValue(0.9)); }), ErrorKind::duplicate);
    EXPECT_NO_THROW(reg.add("L", 2, EntropyValue(0.3)));
    EXPECT_NO_THROW(reg.add("M", 1, EntropyValue(0.3)));
}

TEST(Registry, InvalidWidthAndTolerance) {
    EXPECT_EQ(error_kind([] { IndexRegistry(0.0); }), ErrorKind::invalid_parameter);
    IndexRegistry reg;
    EXPECT_EQ(error_kind([&] { reg.lookup(EntropyValue(0.1), -1.0); }), ErrorKind::invalid_parameter);
}

TEST(Lookup, IntervalSelectsBucket) {
    IndexRegistry reg(0.05);
    reg.add("f", 1, EntropyValue(0.5828));
    reg.add("f", 2, EntropyValue(0.4287));
    const auto hits = reg.lookup(EntropyValue(0.58), 0.01);
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0].frame, 1u);
    EXPECT_EQ(reg.lookup(EntropyValue(0.58), 1.0).size(), 2u);
    EXPECT_TRUE(IndexRegistry().lookup(EntropyValue(0.3), 0.5).empty());
}

TEST(Lookup, OrderedByDistanceThenKey) {
    IndexRegistry reg(1.0);
    reg.add("b", 1, EntropyValue(0.40));
    reg.add("a", 2, EntropyValue(0.60));
    reg.add("a", 1, EntropyValue(0.60));
    reg.add("c", 1, EntropyValue(0.52));
    const auto hits = reg.lookup(EntropyValue(0.5), 0.0);
    ASSERT_EQ(hits.size(), 4u);
    EXPECT_EQ(hits[0].ledger_id, "c");
    EXPECT_EQ(hits[1].ledger_id, "a");
    EXPECT_EQ(hits[1].frame, 1u);
    EXPECT_EQ(hits[2].frame, 2u);
    EXPECT_EQ(hits[3].ledger_id, "b");
}

TEST(Lookup, CollisionsReturnAllCandidates) {
    IndexRegistry reg(0.05);
    reg.add("x", 1, EntropyValue(1.2));
    reg.add("y", 1, EntropyValue(1.2));
    EXPECT_EQ(reg.lookup(EntropyValue(1.2), 0.0).size(), 2u);
}

// Properties: every frame lands in exactly one bucket; completeness and
// determinism of lookups.
TEST(RegistryProperties, CompletenessAndDeterminism) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> tag(0.0, 3.0);
    IndexRegistry a(0.07), b(0.07);
    double max_tag = 0.0;
    for (std::size_t i = 0; i < 200; ++i) {
        const double t = tag(rng);
        max_tag = std::max(max_tag, t);
        a.add("L" + std::to_string(i % 3), i, EntropyValue(t));
        b.add("L" + std::to_string(i % 3), i, EntropyValue(t));
    }
    for (const auto &e : a.entries()) {
        EXPECT_EQ(e.bucket, static_cast<std::int64_t>(std::floor(e.tag.bits() / 0.07)));
        EXPECT_LE(e.bucket * 0.07, e.tag.bits() + 1e-12);
        EXPECT_GT((e.bucket + 1) * 0.07, e.tag.bits() - 1e-12);
    }
    for (double q : {0.0, 1.3, 2.9}) {
        EXPECT_EQ(a.lookup(EntropyValue(q), max_tag).size(), 200u) << q;
    }
    for (int i = 0; i < 20; ++i) {
        const EntropyValue q(tag(rng));
        const auto ra = a.lookup(q, 0.1);
        const auto rb = b.lookup(q, 0.1);
        ASSERT_EQ(ra.size(), rb.size());
        for (std::size_t k = 0; k < ra.size(); ++k) {
            EXPECT_EQ(ra[k].ledger_id, rb[k].ledger_id);
            EXPECT_EQ(ra[k].frame, rb[k].frame);
        }
        // Returned entries are exactly the overlapped buckets' members.
        const auto lo = a.bucket_of(q.bits() - 0.1), hi = a.bucket_of(q.bits() + 0.1);
        std::size_t expected = 0;
        for (const auto &e : a.entries()) expected += (e.bucket >= lo && e.bucket <= hi);
        EXPECT_EQ(ra.size(), expected);
    }
}

TEST(IndexJson, RoundTrip) {
    IndexRegistry reg(0.05);
    reg.add("f.json#gray", 1, EntropyValue(0.5828));
    reg.add("f.json#gray", 2, EntropyValue(0.4287));
    const nlohmann::json j = index_to_json(reg);
    EXPECT_EQ(j["width_bits"], 0.05);
    EXPECT_EQ(j["entries"][0]["bucket"], 11);
    EXPECT_EQ(j["entries"][1]["ledger"], "f.json#gray");
    const IndexRegistry back = index_from_json(nlohmann::json::parse(j.dump()));
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back.entries()[1].tag.bits(), 0.4287);
    EXPECT_EQ(back.lookup(EntropyValue(0.43), 0.0).front().frame, 2u);
}

TEST(IndexJson, RejectsInconsistentBucket) {
    IndexRegistry reg(0.05);
    reg.add("x", 1, EntropyValue(0.5828));
    nlohmann::json j = index_to_json(reg);
    j["entries"][0]["bucket"] = 3;
    EXPECT_EQ(error_kind([&] { index_from_json(j); }), ErrorKind::parse);
    EXPECT_EQ(error_kind([] { index_from_json(nlohmann::json::object()); }), ErrorKind::parse);
}

}  // namespace
}  // namespace qumem
