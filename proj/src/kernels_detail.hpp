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

#pragma once

#include <cstddef>
#include <cstdint>

#include "catmet/kernels.hpp"

namespace catmet::kernels::detail {

struct KernelTable {
    cdouble (*cdot)(const cdouble*, const cdouble*, std::size_t);
    double (*norm_sq)(const cdouble*, std::size_t);
    void (*phase_ramp)(cdouble*, std::size_t, double);
    void (*lincomb2)(cdouble*, cdouble, const cdouble*, cdouble,
                     const cdouble*, std::size_t);
    std::uint64_t (*bernoulli_count)(std::uint64_t, std::uint64_t,
                                     std::uint64_t);
};

extern const KernelTable scalar_table;

#if defined(CATMET_HAVE_AVX2_KERNELS)
extern const KernelTable avx2_table;
#endif

}  // namespace catmet::kernels::detail
