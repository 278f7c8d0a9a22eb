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

#include "qumem/entropy_index.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "qumem/error.hpp"
#include "qumem/ledger_io.hpp"

namespace qumem {

IndexRegistry::IndexRegistry(double width_bits) : width_(width_bits) {
    if (!(width_bits > 0.0) || !std::isfinite(width_bits))
        throw Error(ErrorKind::invalid_parameter,
                    "bucket width must be positive, got " + std::to_string(width_bits));
}

std::int64_t IndexRegistry::bucket_of(double bits) const {
    return static_cast<std::int64_t>(std::floor(bits / width_));
}

const IndexEntry &IndexRegistry::add(std::string ledger_id, std::size_t frame, EntropyValue tag) {
    if (!keys_.emplace(ledger_id, frame).second)
        throw Error(ErrorKind::duplicate, "frame " + std::to_string(frame) + " of ledger '" +
                                              ledger_id + "' is already registered");
    const std::int64_t bucket = bucket_of(tag.bits());
    buckets_[bucket].push_back(entries_.size());
    entries_.push_back(IndexEntry{std::move(ledger_id), frame, tag, bucket});
    return entries_.back();
}

std::vector<IndexEntry> IndexRegistry::lookup(EntropyValue tag, double tolerance) const {
    if (!(tolerance >= 0.0))
        throw Error(ErrorKind::invalid_parameter,
                    "lookup tolerance must be >= 0, got " + std::to_string(tolerance));
    const double q = tag.bits();
    std::vector<IndexEntry> out;
    if (std::isinf(tolerance)) {
        out.assign(entries_.begin(), entries_.end());
    } else {
        const std::int64_t lo = bucket_of(q - tolerance);
        const std::int64_t hi = bucket_of(q + tolerance);
        for (auto it = buckets_.lower_bound(lo); it != buckets_.end() && it->first <= hi; ++it)
            for (std::size_t i : it->second) out.push_back(entries_[i]);
    }
    std::stable_sort(out.begin(), out.end(), [q](const IndexEntry &a, const IndexEntry &b) {
        return std::make_tuple(std::abs(a.tag.bits() - q), std::cref(a.ledger_id), a.frame) <
               std::make_tuple(std::abs(b.tag.bits() - q), std::cref(b.ledger_id), b.frame);
    });
    return out;
}

nlohmann::json index_to_json(const IndexRegistry &registry) {
    nlohmann::json entries = nlohmann::json::array();
    for (const IndexEntry &e : registry.entries()) {
        entries.push_back({{"bucket", e.bucket},
                           {"ledger", e.ledger_id},
                           {"frame", e.frame},
                           {"tag_bits", e.tag.bits()}});
    }
    return {{"width_bits", registry.width()}, {"entries", std::move(entries)}};
}

IndexRegistry index_from_json(const nlohmann::json &j) {
    try {
        IndexRegistry registry(j.at("width_bits").get<double>());
        for (const auto &e : j.at("entries")) {
            const IndexEntry &added =
                registry.add(e.at("ledger").get<std::string>(), e.at("frame").get<std::size_t>(),
                             EntropyValue(e.at("tag_bits").get<double>()));
            if (e.contains("bucket") && e.at("bucket").get<std::int64_t>() != added.bucket)
                throw Error(ErrorKind::parse, "stored bucket disagrees with tag and width");
        }
        return registry;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::parse, std::string("index: ") + e.what());
    }
}

void write_index_file(const std::filesystem::path &path, const IndexRegistry &registry) {
    write_text_file(path, index_to_json(registry).dump(2) + "\n");
}

IndexRegistry read_index_file(const std::filesystem::path &path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::parse, path.string() + ": " + e.what());
    }
    return index_from_json(j);
}

}  // namespace qumem
