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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qumem::cli {

struct EncodeArgs {
    std::vector<std::string> images;
    std::string output;
    double kappa = 1.0;
    std::optional<double> kappa_r, kappa_g, kappa_b;
    double nbar = 0.5;
    std::optional<std::size_t> cutoff;
    std::optional<std::size_t> patch;
};

struct LedgerRef {
    std::string path;
    std::size_t entry = 0;
};

struct RewindArgs {
    LedgerRef ledger;
    std::size_t k = 0;
    std::string output;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 0;
};

struct DecodeArgs {
    LedgerRef ledger;
    std::optional<std::size_t> k;
};

struct WignerArgs {
    LedgerRef ledger;
    std::size_t k = 0;
    std::string grid = "-5:5:200";
    std::string prefix;
};

struct FidelityArgs {
    LedgerRef ledger;
    std::size_t k = 0;
    std::size_t j = 0;
};

struct EntropyArgs {
    std::string path;
    bool nats = false;
};

struct IndexBuildArgs {
    std::vector<std::string> ledgers;
    double width = 0.05;
    std::string output;
};

struct IndexQueryArgs {
    std::string index;
    double tag = 0.0;
    double tolerance = 0.025;
};

/// Inclusive axis "min:max:n".
std::vector<double> parse_grid(const std::string &axis);

void run_encode(const EncodeArgs &args, std::ostream &out);
void run_rewind(const RewindArgs &args, std::ostream &out);
void run_decode(const DecodeArgs &args, std::ostream &out);
void run_wigner(const WignerArgs &args, std::ostream &out);
void run_fidelity(const FidelityArgs &args, std::ostream &out);
void run_entropy(const EntropyArgs &args, std::ostream &out);
void run_index_build(const IndexBuildArgs &args, std::ostream &out);
void run_index_query(const IndexQueryArgs &args, std::ostream &out);

}  // namespace qumem::cli
