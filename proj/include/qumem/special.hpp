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
#include <vector>

namespace qumem::special {

/// ln(n!) from a cumulative table; exact summation up to the table size,
/// lgamma beyond it.
double log_factorial(std::size_t n);

/// Associated Laguerre values L_0^(k)(x) ... L_count-1^(k)(x) by the upward
/// three-term recurrence in n.
std::vector<double> laguerre_sequence(std::size_t k, double x, std::size_t count);

/// Nodes and weights of the n-point Gauss-Laguerre rule for weight e^{-t}
/// on [0, inf).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_laguerre(std::size_t n);

}  // namespace qumem::special
