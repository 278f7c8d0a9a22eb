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

#include "qumem/error.hpp"

namespace qumem {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_dimension: return "invalid-dimension";
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::dimension_mismatch: return "dimension";
        case ErrorKind::truncation: return "truncation";
        case ErrorKind::leakage: return "truncation-leakage";
        case ErrorKind::cutoff: return "cutoff";
        case ErrorKind::gain_too_large: return "gain-too-large";
        case ErrorKind::out_of_range: return "out-of-range";
        case ErrorKind::duplicate: return "duplicate";
        case ErrorKind::parse: return "parse";
        case ErrorKind::io: return "io";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

}  // namespace qumem
