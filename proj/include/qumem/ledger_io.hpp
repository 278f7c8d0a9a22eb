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

// JSON forms of ledgers and state dumps. A ledger file holds one ledger
// object, or an array of them when a run produced several channels or
// patches.

#include <filesystem>
#include <span>
#include <vector>

#include <json.hpp>

#include "qumem/codec.hpp"
#include "qumem/fock.hpp"

namespace qumem {

inline constexpr int kLedgerVersion = 1;

nlohmann::json ledger_to_json(const FrameLedger &ledger);

/// Rejects unknown versions, and stored cumulative/phase values that
/// disagree with the deltas by more than 1e-12.
FrameLedger ledger_from_json(const nlohmann::json &j);

/// Two-space indented, trailing newline. Deterministic for equal input.
std::string dump_ledgers(std::span<const FrameLedger> ledgers);
std::vector<FrameLedger> parse_ledgers(const std::string &text, const std::string &name = "<memory>");

void write_ledger_file(const std::filesystem::path &path, std::span<const FrameLedger> ledgers);
std::vector<FrameLedger> read_ledger_file(const std::filesystem::path &path);

/// {"cutoff": int, "amplitudes": [[re, im], ...]}
nlohmann::json state_to_json(const FockKet &state);
FockKet state_from_json(const nlohmann::json &j);

/// Helpers shared by the file formats.
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

}  // namespace qumem
