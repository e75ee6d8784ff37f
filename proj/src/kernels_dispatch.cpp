// Copyright 2026 The Catmet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <string_view>

#include "catmet/errors.hpp"
#include "kernels_detail.hpp"

namespace catmet::kernels {

namespace {

struct Active {
    const detail::KernelTable* table;
    Isa isa;
};

bool avx2_available() {
#if defined(CATMET_HAVE_AVX2_KERNELS)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Active resolve() {
    Active a{&detail::scalar_table, Isa::scalar};
#if defined(CATMET_HAVE_AVX2_KERNELS)
    if (avx2_available()) {
        a = {&detail::avx2_table, Isa::avx2};
    }
#endif
    if (const char* env = std::getenv("CATMET_ISA")) {
        std::string_view want(env);
        if (want == "scalar") {
            a = {&detail::scalar_table, Isa::scalar};
        } else if (want == "avx2" && avx2_available()) {
#if defined(CATMET_HAVE_AVX2_KERNELS)
            a = {&detail::avx2_table, Isa::avx2};
#endif
        }
        // Unknown or unavailable values fall through to the CPU default.
    }
    return a;
}

Active& active() {
    static Active a = resolve();
    return a;
}

}  // namespace

Isa active_isa() { return active().isa; }

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

void force_isa(Isa isa) {
    if (isa == Isa::scalar) {
        active() = {&detail::scalar_table, Isa::scalar};
        return;
    }
#if defined(CATMET_HAVE_AVX2_KERNELS)
    if (isa == Isa::avx2 && avx2_available()) {
        active() = {&detail::avx2_table, Isa::avx2};
        return;
    }
#endif
    throw Error("requested kernel variant is not available on this host");
}

cdouble cdot(std::span<const cdouble> a, std::span<const cdouble> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("cdot: spans of size " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    return active().table->cdot(a.data(), b.data(), a.size());
}

double norm_sq(std::span<const cdouble> a) {
    return active().table->norm_sq(a.data(), a.size());
}

void phase_ramp(std::span<cdouble> a, double step) {
    if (!std::isfinite(step)) {
        throw InvalidArgument("phase_ramp: step must be finite");
    }
    active().table->phase_ramp(a.data(), a.size(), step);
}

void lincomb2(std::span<cdouble> out, cdouble c0, std::span<const cdouble> x,
              cdouble c1, std::span<const cdouble> y) {
    if (out.size() != x.size() || out.size() != y.size()) {
        throw DimensionMismatch("lincomb2: spans must have equal size");
    }
    active().table->lincomb2(out.data(), c0, x.data(), c1, y.data(),
                             out.size());
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + kGamma * (index + 1));
}

std::uint64_t bernoulli_threshold(double p) {
    constexpr double kTwo53 = 9007199254740992.0;  // 2^53
    if (!(p > 0.0)) {
        return 0;
    }
    if (p >= 1.0) {
        return 1ULL << 53;
    }
    return static_cast<std::uint64_t>(std::ceil(p * kTwo53));
}

std::uint64_t bernoulli_count(std::uint64_t key, std::uint64_t n,
                              std::uint64_t threshold) {
    return active().table->bernoulli_count(key, n, threshold);
}

}  // namespace catmet::kernels
