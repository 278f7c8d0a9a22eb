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

#include "qumem/ledger_io.hpp"
#include "support/expect_error.hpp"

namespace qumem {
namespace {

using test_support::error_kind;

FrameLedger sample_ledger() {
    std::vector<double> f{0.2, 0.5, 1.0};
    EncoderOptions o;
    return encode_sequence(f, o);
}

// Property: reals survive the round trip to at least 15 significant digits.
TEST(LedgerJson, RoundTripPreservesReals) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0), t(0.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> deltas(5);
        std::vector<EntropyValue> tags;
        for (auto &d : deltas) d = {u(rng) / 3.0, u(rng) / 7.0};
        for (int i = 0; i < 5; ++i) tags.emplace_back(t(rng));
        const FrameLedger l(EncodingGain(0.1 + t(rng)), deltas, tags, 23, NoiseParameter(t(rng)),
                            Channel::r, trial % 2 ? std::optional(PatchIndex{1, 3}) : std::nullopt);
        const FrameLedger back = parse_ledgers(dump_ledgers(std::span(&l, 1))).front();
        ASSERT_EQ(back.frame_count(), 5u);
        for (std::size_t i = 0; i < 5; ++i) {
            EXPECT_EQ(back.deltas()[i], l.deltas()[i]);
            EXPECT_EQ(back.tags()[i], l.tags()[i]);
        }
        EXPECT_EQ(back.gain().kappa(), l.gain().kappa());
        EXPECT_EQ(back.noise().nbar(), l.noise().nbar());
        EXPECT_EQ(back.phase(), l.phase());
        EXPECT_EQ(back.patch(), l.patch());
        EXPECT_EQ(back.channel(), Channel::r);
    }
}

TEST(LedgerJson, Schema) {
    const nlohmann::json j = ledger_to_json(sample_ledger());
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["kappa"], 1.0);
    EXPECT_EQ(j["cutoff"], 17);
    EXPECT_EQ(j["noise_nbar"], 0.5);
    EXPECT_EQ(j["deltas"].size(), 3u);
    EXPECT_EQ(j["deltas"][1].size(), 2u);
    EXPECT_EQ(j["cumulative"][0], 1.0);
    EXPECT_EQ(j["phase"], 0.0);
    EXPECT_EQ(j["tags_bits"].size(), 3u);
    EXPECT_EQ(j["channel"], "gray");
    EXPECT_FALSE(j.contains("patch"));
}

TEST(LedgerJson, SingleObjectOrArray) {
    const FrameLedger l = sample_ledger();
    EXPECT_TRUE(nlohmann::json::parse(dump_ledgers(std::span(&l, 1))).is_object());
    const std::vector<FrameLedger> two{l, l};
    const auto parsed = nlohmann::json::parse(dump_ledgers(two));
    EXPECT_TRUE(parsed.is_array());
    EXPECT_EQ(parse_ledgers(dump_ledgers(two)).size(), 2u);
}

TEST(LedgerJson, DumpIsDeterministic) {
    const FrameLedger a = sample_ledger();
    const FrameLedger b = sample_ledger();
    EXPECT_EQ(dump_ledgers(std::span(&a, 1)), dump_ledgers(std::span(&b, 1)));
}

TEST(LedgerJson, RejectsTamperedDerivedFields) {
    nlohmann::json j = ledger_to_json(sample_ledger());
    j["cumulative"][0] = 0.9;
    EXPECT_EQ(error_kind([&] { parse_ledgers(j.dump()); }), ErrorKind::parse);
    j = ledger_to_json(sample_ledger());
    j["phase"] = 0.1;
    EXPECT_EQ(error_kind([&] { parse_ledgers(j.dump()); }), ErrorKind::parse);
    j = ledger_to_json(sample_ledger());
    j["version"] = 2;
    EXPECT_EQ(error_kind([&] { parse_ledgers(j.dump()); }), ErrorKind::parse);
    j = ledger_to_json(sample_ledger());
    j.erase("deltas");
    EXPECT_EQ(error_kind([&] { parse_ledgers(j.dump()); }), ErrorKind::parse);
    EXPECT_EQ(error_kind([] { parse_ledgers("{not json"); }), ErrorKind::parse);
}

TEST(StateJson, RoundTrip) {
    const FockKet k = coherent_ket(Amplitude(0.3, -0.4), 12);
    const nlohmann::json j = state_to_json(k);
    EXPECT_EQ(j["cutoff"], 12);
    EXPECT_EQ(j["amplitudes"].size(), 12u);
    const FockKet back = state_from_json(nlohmann::json::parse(j.dump()));
    for (std::size_t n = 0; n < 12; ++n) EXPECT_EQ(back[n], k[n]);
}

TEST(StateJson, RejectsWrongLength) {
    nlohmann::json j = state_to_json(vacuum(3));
    j["cutoff"] = 4;
    EXPECT_EQ(error_kind([&] { state_from_json(j); }), ErrorKind::parse);
}

}  // namespace
}  // namespace qumem
