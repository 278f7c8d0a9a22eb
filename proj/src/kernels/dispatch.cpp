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

#include <atomic>
#include <string>

#include "qumem/error.hpp"
#include "tables.hpp"

namespace qumem::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(QUMEM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable *best() noexcept {
#if defined(QUMEM_HAVE_AVX2)
    if (cpu_has_avx2()) return &avx2::kTable;
#endif
    return &scalar::kTable;
}

std::atomic<const KernelTable *> g_override{nullptr};

}  // namespace

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

const KernelTable &active() {
    if (const KernelTable *forced = g_override.load(std::memory_order_acquire)) return *forced;
    static const KernelTable *const selected = best();
    return *selected;
}

const KernelTable &table(Isa isa) {
    switch (isa) {
        case Isa::scalar: return scalar::kTable;
        case Isa::avx2:
#if defined(QUMEM_HAVE_AVX2)
            if (cpu_has_avx2()) return avx2::kTable;
#endif
            break;
    }
    throw Error(ErrorKind::invalid_argument,
                "kernel ISA '" + std::string(to_string(isa)) + "' is not available on this host");
}

std::vector<Isa> available() {
    std::vector<Isa> out{Isa::scalar};
    if (cpu_has_avx2()) out.push_back(Isa::avx2);
    return out;
}

void force(Isa isa) { g_override.store(&table(isa), std::memory_order_release); }

void reset() { g_override.store(nullptr, std::memory_order_release); }

std::size_t wigner_work_size(std::size_t dim) noexcept { return 8 * dim; }

}  // namespace qumem::kernels
