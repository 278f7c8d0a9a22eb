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

// Entropy-tag registry. Tags are bucketed by floor(S / width); a lookup
// returns every frame in the buckets its tolerance window touches, nearest
// tag first. Distinct frames can share a bucket (or a tag), so results are
// candidate lists rather than a unique match.

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qumem/metrics.hpp"

namespace qumem {

inline constexpr double kDefaultBucketWidth = 0.05;

struct IndexEntry {
    std::string ledger_id;
    std::size_t frame = 0;
    EntropyValue tag;
    std::int64_t bucket = 0;
};

class IndexRegistry {
  public:
    explicit IndexRegistry(double width_bits = kDefaultBucketWidth);

    double width() const noexcept { return width_; }
    std::int64_t bucket_of(double bits) const;

    /// Throws ErrorKind::duplicate if (ledger_id, frame) is already present.
    const IndexEntry &add(std::string ledger_id, std::size_t frame, EntropyValue tag);

    /// Entries of all buckets overlapping [tag - tolerance, tag + tolerance],
    /// ordered by |stored - tag|, then ledger id, then frame.
    std::vector<IndexEntry> lookup(EntropyValue tag, double tolerance) const;

    /// Registration order.
    std::span<const IndexEntry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

  private:
    double width_;
    std::vector<IndexEntry> entries_;
    std::map<std::int64_t, std::vector<std::size_t>> buckets_;
    std::set<std::pair<std::string, std::size_t>> keys_;
};

/// {"width_bits": w, "entries": [{"bucket", "ledger", "frame", "tag_bits"}, ...]}
nlohmann::json index_to_json(const IndexRegistry &registry);
IndexRegistry index_from_json(const nlohmann::json &j);

void write_index_file(const std::filesystem::path &path, const IndexRegistry &registry);
IndexRegistry read_index_file(const std::filesystem::path &path);

}  // namespace qumem
