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

#include <filesystem>
#include <string>

#include "qumem/image.hpp"
#include "qumem/metrics.hpp"

namespace qumem {

/// First line: corner label then the x values. Each following line: a p
/// value then W along x. Reals use %.17g.
std::string wigner_csv(const WignerGrid &grid);

/// 8-bit graymap, min-max scaled, highest p in the top row.
Image wigner_heatmap(const WignerGrid &grid);

void write_wigner_csv(const std::filesystem::path &path, const WignerGrid &grid);
void write_wigner_pgm(const std::filesystem::path &path, const WignerGrid &grid);

}  // namespace qumem
