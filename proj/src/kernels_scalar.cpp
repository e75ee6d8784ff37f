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

// Reference kernels. Plain loops, no reordering tricks: these define the
// semantics the SIMD variants are tested against.

#include <cmath>

#include "kernels_detail.hpp"

namespace catmet::kernels::detail {

namespace {

cdouble cdot_scalar(const cdouble* a, const cdouble* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm_sq_scalar(const cdouble* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return s;
}

void phase_ramp_scalar(cdouble* a, std::size_t n, double step) {
    for (std::size_t i = 0; i < n; ++i) {
        a[i] *= std::polar(1.0, step * static_cast<double>(i));
    }
}

void lincomb2_scalar(cdouble* out, cdouble c0, const cdouble* x, cdouble c1,
                     const cdouble* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = c0 * x[i] + c1 * y[i];
    }
}

std::uint64_t bernoulli_count_scalar(std::uint64_t key, std::uint64_t n,
                                     std::uint64_t threshold) {
    std::uint64_t count = 0;
    std::uint64_t state = key;
    for (std::uint64_t t = 0; t < n; ++t) {
        state += kGamma;
        if ((mix64(state) >> 11) < threshold) {
            ++count;
        }
    }
    return count;
}

}  // namespace

const KernelTable scalar_table = {
    cdot_scalar, norm_sq_scalar, phase_ramp_scalar, lincomb2_scalar,
    bernoulli_count_scalar,
};

}  // namespace catmet::kernels::detail
